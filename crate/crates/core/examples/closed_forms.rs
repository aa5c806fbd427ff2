//! Two rectangles against a two-row shape, and two-column shapes against a
//! rectangle: closed forms checked against the oracle.

use kronforge::coefficients::{kronecker, Budget};
use kronforge::hooks::{two_column, two_rect_two_row};
use kronforge::Partition;

fn main() -> kronforge::Result<()> {
    let budget = Budget::default();
    for (a, b, c, d) in [(4, 3, 2, 6), (6, 2, 3, 4), (8, 2, 4, 4)] {
        let n = a * b;
        let k = n / 2;
        let g = kronecker(&Partition::rectangle(b, a), &Partition::rectangle(d, c), &Partition::new(vec![n - k, k])?, &budget)?;
        println!("({a}^{b}), ({c}^{d}), ({}, {k}): closed form {} oracle {}", n - k, two_rect_two_row(a, b, c, d, k)?, g.value);
    }
    for (n, d) in [(2, 3), (2, 4), (3, 4), (3, 6)] {
        let k = n * d / 2;
        let r = Partition::rectangle(n, d);
        let g = kronecker(&Partition::rectangle(k, 2), &r, &r, &budget)?;
        println!("(2^{k}), {n}×{d}: closed form {} oracle {}", two_column(n, d, k)?, g.value);
    }
    Ok(())
}
