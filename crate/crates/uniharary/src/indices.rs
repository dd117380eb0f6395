//! Exact topological indices and the closed forms for the extremal
//! unicyclic families.
//!
//! The additively weighted Harary index of a connected graph is
//!
//! ```text
//! H_A(G) = sum over unordered pairs u != v of (deg(u) + deg(v)) / dist(u, v)
//! ```
//!
//! All sums here range over unordered pairs; that is the convention under
//! which `H_A(C_4) = 20` and `H_A(CS_{3,1}) = 21` (the ordered-pair reading
//! would double every value).

use crate::graph::Graph;
use crate::rational::{harmonic, Rational};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index is undefined for disconnected graphs")]
    Disconnected,
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("defined only for odd n, got {0}")]
    RequiresOdd(usize),
}

/// Exact values of the three distance-based indices of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    /// Additively weighted Harary index.
    pub h_a: Rational,
    /// Classical Harary index, the sum of reciprocal distances.
    pub harary: Rational,
    /// Wiener index, the sum of all distances.
    pub wiener: u64,
}

fn check_input(g: &Graph) -> Result<crate::graph::DistanceMatrix, IndexError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(IndexError::TooFewVertices { n, min: 2 });
    }
    let d = g.distances();
    if !d.all_finite() {
        return Err(IndexError::Disconnected);
    }
    Ok(d)
}

/// The additively weighted Harary index of a connected graph on at least
/// two vertices.
pub fn additively_weighted_harary(g: &Graph) -> Result<Rational, IndexError> {
    let d = check_input(g)?;
    let n = g.vertex_count();
    let mut sum = Rational::zero();
    for u in 0..n {
        for v in (u + 1)..n {
            let dist = d.get(u, v).expect("connected") as i64;
            let w = (g.degree(u) + g.degree(v)) as i64;
            sum += Rational::new(w, dist).expect("dist >= 1");
        }
    }
    Ok(sum)
}

/// All three indices in one pass over the distance matrix.
pub fn classical_indices(g: &Graph) -> Result<IndexReport, IndexError> {
    let d = check_input(g)?;
    let n = g.vertex_count();
    let mut h_a = Rational::zero();
    let mut harary = Rational::zero();
    let mut wiener: u64 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let dist = d.get(u, v).expect("connected") as i64;
            let w = (g.degree(u) + g.degree(v)) as i64;
            h_a += Rational::new(w, dist).expect("dist >= 1");
            harary += Rational::new(1, dist).expect("dist >= 1");
            wiener += dist as u64;
        }
    }
    Ok(IndexReport { h_a, harary, wiener })
}

/// `H_A(CS_{3,n-3}) = 3 (n^2 - n + 2) / 2`, the maximum over all unicyclic
/// graphs on `n` vertices.
pub fn cs3_closed_form(n: usize) -> Result<Rational, IndexError> {
    if n < 3 {
        return Err(IndexError::TooFewVertices { n, min: 3 });
    }
    let n = n as i64;
    Ok(Rational::new(3, 2).unwrap() * Rational::integer(n * n - n + 2))
}

/// `H_A(CP_{3,n-3}) = 4 * sum_{i=1}^{n-2} H_{n-i-1} + H_{n-3} + 3 H_{n-2}
/// + (6n - 13)/(n - 2)`, the minimum over all unicyclic graphs on `n >= 5`
/// vertices.
pub fn cp3_closed_form(n: usize) -> Result<Rational, IndexError> {
    if n < 5 {
        return Err(IndexError::TooFewVertices { n, min: 5 });
    }
    let mut tail_sum = Rational::zero();
    for i in 1..=(n - 2) {
        tail_sum += harmonic((n - i - 1) as u64).expect("n - i - 1 >= 1");
    }
    let h_n3 = harmonic((n - 3) as u64).expect("n >= 5");
    let h_n2 = harmonic((n - 2) as u64).expect("n >= 5");
    let n = n as i64;
    Ok(Rational::integer(4) * tail_sum
        + h_n3
        + Rational::integer(3) * h_n2
        + Rational::new(6 * n - 13, n - 2).expect("n > 2"))
}

/// `H_A(C_n)`: `4n * H_{(n-1)/2}` for odd `n`, `4n * H_{n/2-1} + 4` for
/// even `n`.
pub fn cycle_closed_form(n: usize) -> Result<Rational, IndexError> {
    if n < 3 {
        return Err(IndexError::TooFewVertices { n, min: 3 });
    }
    let value = if n % 2 == 1 {
        Rational::integer(4 * n as i64) * harmonic(((n - 1) / 2) as u64).expect("n >= 3")
    } else {
        Rational::integer(4 * n as i64) * harmonic((n / 2 - 1) as u64).expect("n >= 4")
            + Rational::integer(4)
    };
    Ok(value)
}

/// `H_A(CS_{3,n-3}) - H_A(C_n)` for odd `n >= 5`; strictly positive, so the
/// odd cycle never ties the cycle-star maximum.
pub fn odd_cycle_margin(n: usize) -> Result<Rational, IndexError> {
    if n % 2 == 0 {
        return Err(IndexError::RequiresOdd(n));
    }
    if n < 5 {
        return Err(IndexError::TooFewVertices { n, min: 5 });
    }
    Ok(cs3_closed_form(n)? - cycle_closed_form(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_cp, make_cs, make_cycle};
    use crate::graph::Graph;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn h_a_reference_values() {
        let c4 = make_cycle(4).unwrap();
        assert_eq!(additively_weighted_harary(&c4).unwrap(), q(20, 1));

        let cs31 = make_cs(3, 1).unwrap();
        assert_eq!(additively_weighted_harary(&cs31).unwrap(), q(21, 1));

        let k3 = make_cycle(3).unwrap();
        assert_eq!(additively_weighted_harary(&k3).unwrap(), q(12, 1));

        let cp32 = make_cp(3, 2).unwrap();
        assert_eq!(additively_weighted_harary(&cp32).unwrap(), q(30, 1));
        assert_eq!(
            additively_weighted_harary(&cp32).unwrap(),
            cp3_closed_form(5).unwrap()
        );
    }

    #[test]
    fn h_a_rejects_bad_input() {
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(
            additively_weighted_harary(&single),
            Err(IndexError::TooFewVertices { n: 1, min: 2 })
        );
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(additively_weighted_harary(&split), Err(IndexError::Disconnected));
    }

    #[test]
    fn classical_reference_values() {
        let c4 = make_cycle(4).unwrap();
        let r = classical_indices(&c4).unwrap();
        assert_eq!(r.harary, q(5, 1));
        assert_eq!(r.wiener, 8);
        assert_eq!(r.h_a, q(20, 1));

        let k3 = make_cycle(3).unwrap();
        let r = classical_indices(&k3).unwrap();
        assert_eq!(r.harary, q(3, 1));
        assert_eq!(r.wiener, 3);

        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = classical_indices(&path).unwrap();
        assert_eq!(r.harary, q(5, 2));
        assert_eq!(r.wiener, 4);
    }

    #[test]
    fn cs3_closed_form_values() {
        assert_eq!(cs3_closed_form(4).unwrap(), q(21, 1));
        assert_eq!(cs3_closed_form(5).unwrap(), q(33, 1));
        assert_eq!(cs3_closed_form(3).unwrap(), q(12, 1));
        assert_eq!(
            cs3_closed_form(2),
            Err(IndexError::TooFewVertices { n: 2, min: 3 })
        );
    }

    #[test]
    fn cp3_closed_form_values() {
        // 4(H_3 + H_2 + H_1) + H_2 + 3 H_3 + 17/3, worked out by hand
        assert_eq!(cp3_closed_form(5).unwrap(), q(30, 1));
        // 77/3 + 11/6 + 25/4 + 23/4
        assert_eq!(cp3_closed_form(6).unwrap(), q(79, 2));
        assert_eq!(
            cp3_closed_form(4),
            Err(IndexError::TooFewVertices { n: 4, min: 5 })
        );
    }

    #[test]
    fn cycle_closed_form_values() {
        assert_eq!(cycle_closed_form(3).unwrap(), q(12, 1));
        assert_eq!(cycle_closed_form(5).unwrap(), q(30, 1)); // 20 * H_2
        assert_eq!(cycle_closed_form(4).unwrap(), q(20, 1));
        assert_eq!(cycle_closed_form(6).unwrap(), q(40, 1));
        assert_eq!(
            cycle_closed_form(2),
            Err(IndexError::TooFewVertices { n: 2, min: 3 })
        );
    }

    /// The even-cycle branch is validated against brute force before it is
    /// trusted anywhere else.
    #[test]
    fn cycle_closed_form_matches_brute_force() {
        for n in 3..=16 {
            let g = make_cycle(n).unwrap();
            assert_eq!(
                cycle_closed_form(n).unwrap(),
                additively_weighted_harary(&g).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn odd_cycle_margin_values() {
        assert_eq!(odd_cycle_margin(5).unwrap(), q(3, 1));
        // 3/2 * 44 - 28 * H_3 = 66 - 154/3
        assert_eq!(odd_cycle_margin(7).unwrap(), q(44, 3));
        assert_eq!(odd_cycle_margin(4), Err(IndexError::RequiresOdd(4)));
        assert_eq!(
            odd_cycle_margin(3),
            Err(IndexError::TooFewVertices { n: 3, min: 5 })
        );
    }

    #[test]
    fn closed_forms_match_constructed_families() {
        for n in 3..=12 {
            let cs = make_cs(3, n - 3).unwrap();
            assert_eq!(
                additively_weighted_harary(&cs).unwrap(),
                cs3_closed_form(n).unwrap(),
                "CS at n = {n}"
            );
        }
        for n in 5..=12 {
            let cp = make_cp(3, n - 3).unwrap();
            assert_eq!(
                additively_weighted_harary(&cp).unwrap(),
                cp3_closed_form(n).unwrap(),
                "CP at n = {n}"
            );
        }
    }
}
