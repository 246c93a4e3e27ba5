//! Groupings whose dual problem has no feasible certificate at all.
//!
//! With rows, columns, and a third family chosen adversarially, no
//! sign vector can keep every group's scores distinct — the dual
//! feasible set is empty, and with it goes any complete primal
//! solution. This searches slot-to-cell maps lexicographically and
//! reports the first empty-dual third family at sides 2 and 3.

use sudoku_duality::duality::Optimum;
use sudoku_duality::oracle::{enumerate_fd_raw, exact_vd, exact_vp, search_empty_third_family};
use sudoku_duality::problems::PrimalInstance;

fn main() {
    for n in [2usize, 3] {
        let found = search_empty_third_family(n, 200)
            .unwrap()
            .expect("an empty-dual third family exists within 200 attempts");
        println!(
            "side {n}: first empty-dual third family (one-based slots -> cells): {:?}",
            found.to_one_based()
        );
        let inst = PrimalInstance::with_third_family(n, found, vec![]).unwrap();
        for g in 0..n {
            println!("  group {}: cells {:?}", g + 1, inst.system(3).group_cells(g));
        }
        assert!(enumerate_fd_raw(&inst).unwrap().is_empty());
        assert_eq!(exact_vd(&inst).unwrap(), Optimum::Unsolvable);
        let v_p = exact_vp(&inst).unwrap();
        println!("  dual optimum: {}", exact_vd(&inst).unwrap());
        println!("  primal optimum without any clues: {v_p}");
        // a complete solution would yield a feasible certificate, so
        // the primal optimum must stay positive
        assert!(matches!(v_p, Optimum::Value(v) if v >= 1));
        println!();
    }
}
