use std::sync::Arc;
use std::time::Instant;
use parahecke_core::hecke::KlTable;
use parahecke_core::parahecke::CosetSystem;
use parahecke_core::schurweyl::{check_conjectures, RankMode};
use parahecke_core::symgroup::Composition;

fn main() {
    for parts in [vec![4, 3], vec![6, 1], vec![5, 1, 1], vec![1; 7], vec![3, 2, 2]] {
        let mu = Composition::new(parts.clone()).unwrap();
        let n = mu.n();
        let nr = mu.d() - 1;
        let sys = CosetSystem::new(mu, Arc::new(KlTable::new(n)));
        eprintln!("mu={:?} cosets={}", parts, sys.num_cosets());
        let t = Instant::now();
        let r = check_conjectures(&sys, nr, RankMode::Exact, 0, false).unwrap();
        eprintln!(
            "  N={}: idealDim={} verified={} in {:?}",
            nr, r.ideal_dim, r.all_verified(), t.elapsed()
        );
    }
}
