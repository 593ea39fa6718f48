/// Resource caps for computations whose cost grows with `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest Frobenius power `q` to try; `None` means `p^6`.
    pub max_q: Option<u64>,
    /// Largest number of coordinates in a graded-piece linear system.
    pub max_cols: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_q: None, max_cols: 20_000 }
    }
}

impl Limits {
    pub fn max_q_for(&self, p: u32) -> u64 {
        self.max_q.unwrap_or_else(|| (p as u64).saturating_pow(6))
    }
}
