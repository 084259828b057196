//! Sections of the blow-up of a cyclic quotient singularity, read off as
//! lattice points cut out by a monomial valuation.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::GeometryError;

/// Exponent vectors `m` in `[0, bound]^n` with `<v, m> = d (mod r)` and
/// `<v, m> >= d`.
pub fn cyclic_quotient_sections(
    r: i64,
    weights: &[i64],
    d: i64,
    bound: i64,
) -> Result<BTreeSet<Vec<i64>>, GeometryError> {
    if r < 2 {
        return Err(GeometryError::Malformed(format!("order {r} must exceed 1")));
    }
    if weights.iter().any(|&w| w < 0) || bound < 0 {
        return Err(GeometryError::Malformed("weights and box must be non-negative".into()));
    }
    if weights.iter().fold(r, |g, &w| g.gcd(&w)) != 1 {
        return Err(GeometryError::NotFaithful { order: r });
    }
    let n = weights.len();
    let mut out = BTreeSet::new();
    let mut m = vec![0i64; n];
    loop {
        let val: i64 = m.iter().zip(weights).map(|(a, w)| a * w).sum();
        if (val - d).rem_euclid(r) == 0 && val >= d {
            out.insert(m.clone());
        }
        let mut k = 0;
        while k < n && m[k] == bound {
            m[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        m[k] += 1;
    }
    Ok(out)
}

/// Two-dimensional picture of a section set, top row first: `*` for a
/// member and `o` for any other point of the box.
pub fn render_panel(points: &BTreeSet<Vec<i64>>, bound: i64) -> Vec<String> {
    (0..=bound)
        .rev()
        .map(|b| {
            (0..=bound)
                .map(|a| if points.contains(&vec![a, b]) { '*' } else { 'o' })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_is_whole_congruence_class() {
        let s = cyclic_quotient_sections(2, &[1, 1], 0, 5).unwrap();
        assert_eq!(s.len(), 18);
        assert!(s.iter().all(|m| (m[0] + m[1]) % 2 == 0));
        let s = cyclic_quotient_sections(2, &[1, 1], -3, 5).unwrap();
        assert_eq!(s.len(), 18);
    }

    #[test]
    fn corner_disappears() {
        let s = cyclic_quotient_sections(2, &[1, 1], 2, 5).unwrap();
        assert!(!s.contains(&vec![0, 0]));
        assert_eq!(s.len(), 17);
    }

    #[test]
    fn filtration_decreases() {
        for d in -2..8 {
            let a = cyclic_quotient_sections(3, &[1, 2], d, 6).unwrap();
            let b = cyclic_quotient_sections(3, &[1, 2], d + 3, 6).unwrap();
            assert!(b.is_subset(&a));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(cyclic_quotient_sections(4, &[2, 2], 0, 3), Err(GeometryError::NotFaithful { order: 4 }));
        assert!(matches!(cyclic_quotient_sections(1, &[1], 0, 3), Err(GeometryError::Malformed(_))));
    }

    #[test]
    fn render() {
        let s = cyclic_quotient_sections(2, &[1, 1], 7, 5).unwrap();
        let p = render_panel(&s, 5);
        assert_eq!(p[0], "oo*o*o");
        assert_eq!(p[5], "oooooo");
    }
}
