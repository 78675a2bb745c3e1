//! Empirical scaling of the full pipeline, recorded next to the predicted
//! cost units sum_{l=1}^{c} c * chi_l * n* * a1 * (n* - l), where n* is the
//! number of semigroup elements up to the truncation bound n = (c-1)(a1+2).
//!
//! Documentation only; nothing here is asserted. Run with
//! `cargo run --release -p hilbert-zeta --example scaling`.

use std::sync::Arc;
use std::time::Instant;

use hilbert_zeta::motive::zeta;
use hilbert_zeta::semigroup::NumericalSemigroup;
use hilbert_zeta::tree::build_tree;

fn main() {
    let family: Vec<Vec<u64>> = vec![
        vec![2, 3],
        vec![2, 7],
        vec![3, 4],
        vec![3, 5],
        vec![4, 5, 6],
        vec![4, 5, 7],
        vec![4, 7],
        vec![5, 6, 7, 8, 9],
        vec![5, 7],
        vec![6, 7],
        vec![7, 8],
        vec![5, 8],
        vec![6, 11],
    ];

    println!(
        "{:<14} {:>4} {:>5} {:>6} {:>7} {:>9} {:>14} {:>10} {:>12}",
        "generators", "c", "a1", "n", "n*", "nodes", "units", "time", "ns/unit"
    );
    for gens in &family {
        let semigroup =
            Arc::new(NumericalSemigroup::from_generators(gens).expect("valid generators"));
        let c = semigroup.conductor();
        let a1 = semigroup.multiplicity();
        let n = semigroup.effective_bound();
        let n_star = (0..=n).filter(|&x| semigroup.contains(x).unwrap()).count() as u64;

        let tree = build_tree(&semigroup).expect("tree builds");
        let nodes: usize = tree.euler_numbers().iter().sum();
        let units: u64 = tree
            .euler_numbers()
            .iter()
            .enumerate()
            .map(|(k, &chi)| {
                let ell = (k + 1) as u64;
                c * chi as u64 * n_star * a1 * n_star.saturating_sub(ell)
            })
            .sum();

        // Median of a few timed runs of the whole pipeline.
        let mut samples: Vec<u128> = (0..5)
            .map(|_| {
                let start = Instant::now();
                let z = zeta(&semigroup).expect("zeta computes");
                std::hint::black_box(z);
                start.elapsed().as_nanos()
            })
            .collect();
        samples.sort_unstable();
        let median_ns = samples[samples.len() / 2];

        println!(
            "{:<14} {:>4} {:>5} {:>6} {:>7} {:>9} {:>14} {:>9.3}ms {:>12.2}",
            format!("<{}>", gens.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
            c,
            a1,
            n,
            n_star,
            nodes,
            units,
            median_ns as f64 / 1e6,
            median_ns as f64 / units.max(1) as f64,
        );
    }
    println!();
    println!("units = sum over levels of c * chi_l * n* * a1 * (n* - l), an");
    println!("upper-bound cost model; the scaling check is that ns/unit never");
    println!("grows as the inputs grow (the implementation scans windows");
    println!("tighter than n*, so the ratio typically shrinks).");
}
