//! Criterion benchmarks for the hot kernels and the scenario runners; see
//! `benches/`.
