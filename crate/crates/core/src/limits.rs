//! Resource budgets for enumeration, construction, and brute-force oracles.

/// Hard caps applied before any large allocation or scan. Exceeding a cap is
/// reported as [`crate::Error::ResourceLimit`].
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Bounding-box point budget for a single lattice-ball scan.
    pub max_scan_points: u64,
    /// Maximum vertices in any constructed graph.
    pub max_vertices: u64,
    /// Maximum edges in any constructed graph.
    pub max_edges: u64,
    /// Maximum vertex count admitted by the all-pairs distance oracle.
    pub oracle_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_scan_points: 200_000_000,
            max_vertices: 4_000_000,
            max_edges: 16_000_000,
            oracle_cap: 6_000,
        }
    }
}

impl Limits {
    /// Defaults overridden by `HULLBOUND_MAX_SCAN`, `HULLBOUND_MAX_VERTICES`,
    /// `HULLBOUND_MAX_EDGES`, and `HULLBOUND_ORACLE_CAP`.
    pub fn from_env() -> Self {
        fn read(name: &str, default: u64) -> u64 {
            std::env::var(name)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(default)
        }
        let d = Limits::default();
        Limits {
            max_scan_points: read("HULLBOUND_MAX_SCAN", d.max_scan_points),
            max_vertices: read("HULLBOUND_MAX_VERTICES", d.max_vertices),
            max_edges: read("HULLBOUND_MAX_EDGES", d.max_edges),
            oracle_cap: read("HULLBOUND_ORACLE_CAP", d.oracle_cap),
        }
    }
}
