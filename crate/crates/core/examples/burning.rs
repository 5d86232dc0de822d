//! Burning numbers of paths and the `⌈√n⌉` schedules read off spanning
//! caterpillars.

use biconvex::burning::{
    ceil_sqrt, check_conjecture, exact_burning_number, is_burning_schedule, simulate_fire_spread,
};
use biconvex::generators::{corpus, path_graph};
use biconvex::spath::path_text;

pub fn main() {
    for m in [1, 2, 4, 5, 9, 10, 16, 17, 25] {
        let p = path_graph(m).unwrap();
        let (b, s) = exact_burning_number(&p, 8).unwrap();
        println!("b(P_{m}) = {b} (⌈√m⌉ = {}), schedule {}", ceil_sqrt(m), path_text(&s.sources));
        assert!(simulate_fire_spread(&p, &s.sources));
    }
    for seed in 0..6 {
        let (kind, g, d) = corpus::structured_small(seed, 16);
        let r = check_conjecture(&g, &d).unwrap();
        println!(
            "{kind:?} n = {:2}: schedule {} (length {}), exact b = {:?}, bound {}, pass {}",
            r.n,
            path_text(&r.schedule.sources),
            r.len,
            r.exact_b,
            r.bound,
            r.pass
        );
        assert!(r.pass && is_burning_schedule(&g, &r.schedule));
    }
}
