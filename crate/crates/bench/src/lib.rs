//! Workloads shared by the criterion benches.

use abs_extremal::families::{build_kappa_xy, build_knp};
use abs_extremal::{enumerate, EnumSpec, Graph};

/// Every connected graph on `n` vertices, canonically labeled.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    enumerate(&EnumSpec::connected(n)).expect("order within the enumeration envelope")
}

/// Dense and sparse family members of order `n`, for index and canonical-form timing.
pub fn family_graphs(n: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=n - 2).map(|p| build_knp(n, p).expect("valid K_n^p")).collect();
    let kappa = 1;
    out.push(build_kappa_xy(n / 2, n - kappa - 1 - n / 2, kappa).expect("valid Kbar"));
    out
}
