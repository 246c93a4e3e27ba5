//! Extended-integer arithmetic and pair-difference matrices.
//!
//! Shows how the adjoined infinity behaves (it never equals anything,
//! including itself, and absorbs sums), prints the dense
//! pair-difference matrix of each standard family on the 4x4 board,
//! and demonstrates the score identity that recovers a value ordering
//! from its difference signs.

use sudoku_duality::extint::{ext_mul, ExtInt};
use sudoku_duality::pairdiff::{
    pair_differences, pair_rows, pair_scores, standard_perms, GroupSystem,
};

fn main() {
    let a = ExtInt::Fin(3);
    let inf = ExtInt::Inf;
    println!("3 + inf = {}", a + inf);
    println!("0 * inf = {}", ext_mul(0, inf));
    println!("2 * inf = {}", ext_mul(2, inf));
    println!("inf model-equals inf? {}", inf.model_eq(inf));
    println!("inf counts as nonzero? {}", inf.is_nonzero());
    println!();

    println!("pair rows for one group of side 4: {:?}", pair_rows(4));
    println!("differences of (3,4,1,2): {:?}", pair_differences(&[3, 4, 1, 2]));
    println!();

    let (p1, p2, p3) = standard_perms(4);
    for (name, p) in [("rows", p1), ("columns", p2), ("blocks", p3.unwrap())] {
        println!("pair-difference matrix, {} family, side 4:", name);
        print!("{}", GroupSystem::new(4, p).render_matrix());
        println!();
    }

    // signs of a value ordering's differences recover the ordering:
    // scores + (n+1) = 2 * values
    let values = [3i64, 4, 1, 2];
    let signs: Vec<i64> = pair_differences(&values)
        .iter()
        .map(|&d| if d > 0 { 1 } else { -1 })
        .collect();
    let scores = pair_scores(4, &signs);
    println!("values  {values:?}");
    println!("signs   {signs:?}");
    println!("scores  {scores:?}");
    let recovered: Vec<i64> = scores.iter().map(|y| (y + 5) / 2).collect();
    println!("(scores + 5) / 2 = {recovered:?}");
    assert_eq!(recovered, values);
}
