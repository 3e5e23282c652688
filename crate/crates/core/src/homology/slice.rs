use crate::ring::linalg::{self, Vector};
use crate::ring::Field;

/// Which subset-indexed complex a slice belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SliceKind {
    /// Cohomological, `C^i → C^{i+1}` by adding an index.
    Cech,
    /// Homological, `K_i → K_{i−1}` by removing an index.
    Koszul,
}

/// One graded piece of a Čech or Koszul complex of a monomial sequence. A
/// component `S ⊆ {1..ℓ}` is either `k` or `0`; `present` has bit `S` set for
/// the nonzero ones, and every map between nonzero components is `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SliceComplex {
    pub kind: SliceKind,
    pub len: usize,
    pub present: u64,
}

/// `(−1)^{#{s ∈ S : s < j}}`.
fn sign(s: u32, j: usize) -> i64 {
    if (s & ((1u32 << j) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl SliceComplex {
    pub fn new(kind: SliceKind, len: usize, present: u64) -> Self {
        SliceComplex { kind, len, present }
    }

    pub fn is_present(&self, s: u32) -> bool {
        self.present >> s & 1 == 1
    }

    /// Nonzero components of size `i`, ordered by mask.
    pub fn basis(&self, i: usize) -> Vec<u32> {
        (0..1u32 << self.len)
            .filter(|&s| s.count_ones() as usize == i && self.is_present(s))
            .collect()
    }

    pub fn component_dims(&self) -> Vec<usize> {
        (0..=self.len).map(|i| self.basis(i).len()).collect()
    }

    /// Matrix of the differential leaving index `i`, as rows over the target
    /// basis. Empty when the target index is out of range.
    pub fn differential(&self, field: Field, i: usize) -> Vec<Vector> {
        let src = self.basis(i);
        let tgt = match self.kind {
            SliceKind::Cech if i < self.len => self.basis(i + 1),
            SliceKind::Koszul if i > 0 => self.basis(i - 1),
            _ => return vec![],
        };
        let mut m = vec![vec![field.zero(); src.len()]; tgt.len()];
        for (c, &s) in src.iter().enumerate() {
            for j in 0..self.len {
                let inside = s >> j & 1 == 1;
                let t = match self.kind {
                    SliceKind::Cech if !inside => s | 1 << j,
                    SliceKind::Koszul if inside => s & !(1 << j),
                    _ => continue,
                };
                if let Ok(r) = tgt.binary_search(&t) {
                    m[r][c] = field.from_i64(sign(s, j));
                }
            }
        }
        m
    }

    fn rank_of(&self, field: Field, i: usize) -> usize {
        let m = self.differential(field, i);
        linalg::rank(&m, self.basis(i).len())
    }

    /// `dim H^i` (Čech) or `dim H_i` (Koszul) for `i = 0..=ℓ`.
    pub fn cohomology(&self, field: Field) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.len).map(|i| self.rank_of(field, i)).collect();
        (0..=self.len)
            .map(|i| {
                let dim = self.basis(i).len();
                let incoming = match self.kind {
                    SliceKind::Cech if i > 0 => ranks[i - 1],
                    SliceKind::Koszul if i < self.len => ranks[i + 1],
                    _ => 0,
                };
                dim - ranks[i] - incoming
            })
            .collect()
    }

    /// `Σ (−1)^i dim` of the components.
    pub fn euler_characteristic(&self) -> i64 {
        self.component_dims()
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
