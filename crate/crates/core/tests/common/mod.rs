#![allow(dead_code)]

use semihyp::FiniteSemigroup;

/// `upper ∪ lower` where every element of `upper` acts as the identity on
/// the ideal `lower`. Upper elements come first.
pub fn stack(upper: &FiniteSemigroup, lower: &FiniteSemigroup) -> FiniteSemigroup {
    let (u, l) = (upper.order(), lower.order());
    let n = u + l;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| match (x < u, y < u) {
                    (true, true) => upper.mul(x, y),
                    (true, false) => y,
                    (false, true) => x,
                    (false, false) => u + lower.mul(x - u, y - u),
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::new(table, None).expect("stacked semigroup is associative")
}

/// Independent associativity check straight from the rows.
pub fn associative(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])))
}
