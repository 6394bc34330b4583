use num_traits::Zero;

use super::field::Rational;

/// Values at `i = 0..=d` of the lower convex hull of the points `(i, a_i)`.
///
/// The result satisfies `b_i <= a_i`, agrees at both endpoints, and has
/// nondecreasing successive differences.
pub fn lower_convex_hull(heights: &[Rational]) -> Vec<Rational> {
    let n = heights.len();
    if n <= 2 {
        return heights.to_vec();
    }
    // Monotone chain, keeping only strictly convex corners.
    let mut corners: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        while corners.len() >= 2 {
            let o = corners[corners.len() - 2];
            let a = corners[corners.len() - 1];
            if cross(o, &heights[o], a, &heights[a], i, &heights[i]) <= Rational::zero() {
                corners.pop();
            } else {
                break;
            }
        }
        corners.push(i);
    }
    let mut out = Vec::with_capacity(n);
    for w in corners.windows(2) {
        let (l, r) = (w[0], w[1]);
        let slope = (&heights[r] - &heights[l]) / Rational::from_integer(((r - l) as i64).into());
        for i in l..r {
            out.push(&heights[l] + &slope * Rational::from_integer(((i - l) as i64).into()));
        }
    }
    out.push(heights[n - 1].clone());
    out
}

fn cross(o: usize, yo: &Rational, a: usize, ya: &Rational, b: usize, yb: &Rational) -> Rational {
    let ax = Rational::from_integer(((a - o) as i64).into());
    let bx = Rational::from_integer(((b - o) as i64).into());
    &ax * (yb - yo) - &bx * (ya - yo)
}
