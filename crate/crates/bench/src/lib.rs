//! Benchmark fixtures; the benchmarks themselves live in `benches/`.

use garside_core::coxeter::{catalog, CatalogSpec};
use garside_core::CoxeterSystem;

pub fn system(ty: &str, rank: usize) -> CoxeterSystem {
    let matrix = catalog(&CatalogSpec { ty: ty.into(), rank: Some(rank), ..Default::default() }).expect("catalog type");
    CoxeterSystem::new(matrix).expect("small roots fit the default cap")
}
