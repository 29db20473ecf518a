/// Size caps guarding the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest element set (group or assembled ring) we enumerate.
    pub max_order: usize,
    /// Largest carrier for m-step-graph methods.
    pub max_radical: usize,
    /// Largest ring for ideal-lattice methods.
    pub max_lattice: usize,
    /// Largest single product table `|A_ij| * |A_jk|`.
    pub max_table: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 65536,
            max_radical: 4096,
            max_lattice: 256,
            max_table: 1 << 22,
        }
    }
}

impl Limits {
    /// Number of ideals the lattice enumeration may hold before giving up.
    pub fn max_ideals(&self) -> usize {
        self.max_lattice.saturating_mul(self.max_lattice)
    }
}
