use std::time::Duration;

/// Run parameters for [`crate::kdc`].
///
/// The toggles exist to compare variants of the solver; every combination
/// returns the same optimum, only the amount of search differs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Non-edge budget.
    pub k: usize,
    pub time_limit: Option<Duration>,
    pub enable_ub1: bool,
    pub enable_ub2: bool,
    pub enable_ub3: bool,
    pub enable_rr3: bool,
    pub enable_rr4: bool,
    /// Truss peeling during preprocessing.
    pub enable_rr6: bool,
    /// Per-vertex neighborhood heuristic instead of the plain suffix one.
    pub use_degen_opt: bool,
    /// Nodes between two clock reads.
    pub node_check_interval: u64,
    /// Only read by randomized test harnesses.
    pub seed: u64,
}

impl SolverConfig {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            time_limit: None,
            enable_ub1: true,
            enable_ub2: true,
            enable_ub3: true,
            enable_rr3: true,
            enable_rr4: true,
            enable_rr6: true,
            use_degen_opt: true,
            node_check_interval: 1024,
            seed: 0,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn without_ub1(mut self) -> Self {
        self.enable_ub1 = false;
        self
    }

    pub fn without_rr34(mut self) -> Self {
        self.enable_rr3 = false;
        self.enable_rr4 = false;
        self
    }

    /// Plain suffix heuristic and no truss peeling in preprocessing.
    pub fn degen_only(mut self) -> Self {
        self.use_degen_opt = false;
        self.enable_rr6 = false;
        self
    }

    pub fn without_bounds(mut self) -> Self {
        self.enable_ub1 = false;
        self.enable_ub2 = false;
        self.enable_ub3 = false;
        self
    }
}
