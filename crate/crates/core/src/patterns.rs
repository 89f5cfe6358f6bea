//! Named patterns and pattern families.

use crate::error::{Error, Result};
use crate::matrix::{Matrix01, PatternSet};

/// The fixed patterns `L1`, `L2` and `L3`.
pub fn pattern_l(i: u8) -> Result<Matrix01> {
    let text = match i {
        1 => "0110\n1001\n0100",
        2 => "01110\n10001\n00100",
        3 => "01110\n10000\n00001\n00100",
        _ => return Err(Error::InvalidArgument(format!("no pattern L{i}; expected 1, 2 or 3"))),
    };
    Matrix01::parse(text)
}

/// The all-ones `r x c` matrix `P_{r,c}`.
///
/// Panics if `r` or `c` is zero.
pub fn pattern_p(r: usize, c: usize) -> Matrix01 {
    assert!(r >= 1 && c >= 1, "P_{{r,c}} needs r, c >= 1");
    Matrix01::ones(r, c)
}

/// `n x n` matrix with a one at `(i, perm[i])`; `perm` lists 1-based column indices.
pub fn permutation_matrix(perm: &[usize]) -> Result<Matrix01> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::NotPermutation(n));
        }
        seen[p - 1] = true;
    }
    if n == 0 {
        return Err(Error::InvalidArgument("empty permutation".into()));
    }
    let ones: Vec<(usize, usize)> = perm.iter().enumerate().map(|(i, &p)| (i, p - 1)).collect();
    Ok(Matrix01::from_ones(n, n, &ones))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Parameters of the family `T_{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrsParams {
    pub r: usize,
    pub s: usize,
}

impl TrsParams {
    pub fn new(r: usize, s: usize) -> Self {
        TrsParams { r, s }
    }

    pub fn rows(&self) -> usize {
        self.r + self.s + 2
    }

    pub fn cols(&self) -> usize {
        self.r + 2 * self.s + 2
    }

    /// `((s+1)!)^2 * r!`
    pub fn member_count(&self) -> usize {
        let f = |n: usize| (1..=n).product::<usize>();
        f(self.s + 1).pow(2) * f(self.r)
    }

    /// The member built from three permutations given as 0-based row-to-column maps.
    pub fn member(&self, left: &[usize], middle: &[usize], right: &[usize]) -> Matrix01 {
        let (r, s) = (self.r, self.s);
        assert!(left.len() == s + 1 && right.len() == s + 1 && middle.len() == r);
        let mut m = Matrix01::zeros(self.rows(), self.cols());
        for j in s + 1..s + 1 + r {
            m.set(0, j, true);
        }
        for a in 0..=s {
            m.set(1 + a, left[a], true);
            m.set(1 + a, s + 1 + r + right[a], true);
        }
        for (a, &c) in middle.iter().enumerate() {
            m.set(s + 2 + a, s + 1 + c, true);
        }
        m
    }
}

/// Every member of `T_{r,s}`, ordered lexicographically by (left, middle, right) permutation.
///
/// For `r = 0` the first row of every member is zero; the literal definition is kept.
pub fn generate_t(params: TrsParams) -> PatternSet {
    let outer = permutations(params.s + 1);
    let middle = permutations(params.r);
    let members = outer
        .iter()
        .flat_map(|l| middle.iter().map(move |m| (l, m)))
        .flat_map(|(l, m)| outer.iter().map(move |r| (l, m, r)))
        .map(|(l, m, r)| params.member(l, m, r))
        .collect();
    PatternSet::new(members).expect("T_{r,s} is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{contains, is_light};
    use std::collections::HashSet;

    #[test]
    fn l_patterns_match_their_entries() {
        let ones = |m: Matrix01| m.ones_positions().map(|(i, j)| (i + 1, j + 1)).collect::<Vec<_>>();
        assert_eq!(
            ones(pattern_l(1).unwrap()),
            vec![(1, 2), (1, 3), (2, 1), (2, 4), (3, 2)]
        );
        assert_eq!(
            ones(pattern_l(2).unwrap()),
            vec![(1, 2), (1, 3), (1, 4), (2, 1), (2, 5), (3, 3)]
        );
        assert_eq!(
            ones(pattern_l(3).unwrap()),
            vec![(1, 2), (1, 3), (1, 4), (2, 1), (3, 5), (4, 3)]
        );
        assert!(pattern_l(4).is_err());
    }

    #[test]
    fn all_ones() {
        assert_eq!(pattern_p(1, 1).to_text(), "1");
        assert_eq!(pattern_p(2, 2).to_text(), "11\n11");
        assert_eq!(pattern_p(3, 5).weight(), 15);
    }

    #[test]
    fn permutation_matrices() {
        assert_eq!(permutation_matrix(&[1]).unwrap().to_text(), "1");
        assert_eq!(permutation_matrix(&[2, 1]).unwrap().to_text(), "01\n10");
        assert_eq!(permutation_matrix(&[1, 1]), Err(Error::NotPermutation(2)));
        assert_eq!(permutation_matrix(&[0, 1]), Err(Error::NotPermutation(2)));
        for p in permutations(4) {
            let one_based: Vec<usize> = p.iter().map(|x| x + 1).collect();
            let m = permutation_matrix(&one_based).unwrap();
            assert!(is_light(&m));
            assert!((0..4).all(|i| m.row_weight(i) == 1));
        }
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[1], vec![0, 2, 1]);
        assert_eq!(p[5], vec![2, 1, 0]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn t_small_members() {
        let t10 = generate_t(TrsParams::new(1, 0));
        assert_eq!(t10.len(), 1);
        assert_eq!(t10.patterns()[0].to_text(), "010\n101\n010");
        let t00 = generate_t(TrsParams::new(0, 0));
        assert_eq!(t00.patterns()[0].to_text(), "00\n11");
    }

    #[test]
    fn t_family_shape() {
        for r in 0..=3 {
            for s in 0..=2 {
                let p = TrsParams::new(r, s);
                let set = generate_t(p);
                assert_eq!(set.len(), p.member_count());
                let distinct: HashSet<_> = set.iter().cloned().collect();
                assert_eq!(distinct.len(), set.len());
                for m in &set {
                    assert_eq!((m.rows(), m.cols()), (r + s + 2, r + 2 * s + 2));
                    assert_eq!(m.weight(), 2 * s + 2 * r + 2);
                }
            }
        }
        assert_eq!(TrsParams::new(4, 1).member_count(), 96);
        assert_eq!(generate_t(TrsParams::new(2, 1)), generate_t(TrsParams::new(2, 1)));
    }

    #[test]
    fn t_blocks_recover_permutations() {
        let p = TrsParams::new(2, 1);
        let set = generate_t(p);
        let outer = permutations(2);
        let middle = permutations(2);
        let mut idx = 0;
        for l in &outer {
            for m in &middle {
                for r in &outer {
                    let member = &set.patterns()[idx];
                    let left = member.select(&[1, 2], &[0, 1]);
                    let right = member.select(&[1, 2], &[4, 5]);
                    let mid = member.select(&[3, 4], &[2, 3]);
                    let perm = |mat: &Matrix01| (0..mat.rows()).map(|i| mat.row_ones(i)[0]).collect::<Vec<_>>();
                    assert_eq!(&perm(&left), l);
                    assert_eq!(&perm(&mid), m);
                    assert_eq!(&perm(&right), r);
                    idx += 1;
                }
            }
        }
    }

    #[test]
    fn t31_members_contain_l3() {
        let l3 = pattern_l(3).unwrap();
        assert!(generate_t(TrsParams::new(3, 1)).iter().all(|m| contains(m, &l3)));
    }
}
