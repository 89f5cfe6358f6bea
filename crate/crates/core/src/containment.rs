//! Ordered submatrix containment.
//!
//! The search assigns pattern columns to host columns left to right. For every
//! pattern row it keeps the mask of host rows still compatible with all
//! columns chosen so far; a partial assignment survives only if the masks
//! admit a strictly increasing choice of rows, which a greedy
//! lowest-available-row scan decides exactly.

use crate::matrix::Matrix01;

const WORD: usize = 64;

/// Host matrix stored column-wise as row masks. This is the working form used
/// by the searches, which grow and shrink it one cell or column at a time.
#[derive(Clone, Debug)]
pub(crate) struct ColumnBits {
    rows: usize,
    cols: usize,
    words: usize,
    masks: Vec<u64>,
}

impl ColumnBits {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = rows.div_ceil(WORD).max(1);
        ColumnBits {
            rows,
            cols,
            words,
            masks: vec![0; cols * words],
        }
    }

    pub fn from_matrix(m: &Matrix01) -> Self {
        let mut out = Self::new(m.rows(), m.cols());
        for (i, j) in m.ones_positions() {
            out.set(i, j, true);
        }
        out
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.masks[j * self.words + i / WORD];
        if value {
            *w |= 1 << (i % WORD);
        } else {
            *w &= !(1 << (i % WORD));
        }
    }

    #[inline]
    fn column(&self, j: usize) -> &[u64] {
        &self.masks[j * self.words..(j + 1) * self.words]
    }

    pub fn push_column(&mut self, ones: &[usize]) {
        self.masks.extend(std::iter::repeat_n(0, self.words));
        self.cols += 1;
        for &i in ones {
            self.set(i, self.cols - 1, true);
        }
    }

    pub fn pop_column(&mut self) {
        self.cols -= 1;
        self.masks.truncate(self.cols * self.words);
    }

    pub fn to_matrix(&self) -> Matrix01 {
        let mut m = Matrix01::zeros(self.rows, self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                if self.column(j)[i / WORD] >> (i % WORD) & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }
}

/// A pattern preprocessed for repeated containment queries.
#[derive(Clone, Debug)]
pub(crate) struct CompiledPattern {
    rows: usize,
    cols: usize,
    col_ones: Vec<Vec<usize>>,
    ones: Vec<(usize, usize)>,
}

impl CompiledPattern {
    pub fn new(p: &Matrix01) -> Self {
        CompiledPattern {
            rows: p.rows(),
            cols: p.cols(),
            col_ones: (0..p.cols()).map(|j| p.col_ones(j)).collect(),
            ones: p.ones_positions().collect(),
        }
    }

    fn fits(&self, host: &ColumnBits) -> bool {
        self.rows <= host.rows && self.cols <= host.cols
    }
}

struct Search<'a> {
    host: &'a ColumnBits,
    pat: &'a CompiledPattern,
    words: usize,
    // one block of `pat.rows * words` masks per search depth
    stack: Vec<u64>,
    forced: Option<(usize, usize)>,
}

impl<'a> Search<'a> {
    fn new(host: &'a ColumnBits, pat: &'a CompiledPattern, forced: Option<(usize, usize)>) -> Self {
        let words = host.words;
        let block = pat.rows * words;
        let mut stack = vec![0u64; block * (pat.cols + 1)];
        for a in 0..pat.rows {
            fill_low_bits(&mut stack[a * words..(a + 1) * words], host.rows);
        }
        Search {
            host,
            pat,
            words,
            stack,
            forced,
        }
    }

    fn pin_row(&mut self, a: usize, i: usize) {
        let w = self.words;
        let mask = &mut self.stack[a * w..(a + 1) * w];
        mask.iter_mut().for_each(|x| *x = 0);
        mask[i / WORD] = 1 << (i % WORD);
    }

    fn run(&mut self) -> bool {
        self.feasible(0) && self.dfs(0, 0)
    }

    fn feasible(&self, level: usize) -> bool {
        let w = self.words;
        let base = level * self.pat.rows * w;
        let mut pos = 0;
        for a in 0..self.pat.rows {
            let mask = &self.stack[base + a * w..base + (a + 1) * w];
            match next_set_bit(mask, pos) {
                Some(idx) if idx < self.host.rows => pos = idx + 1,
                _ => return false,
            }
        }
        true
    }

    fn dfs(&mut self, b: usize, start: usize) -> bool {
        let q = self.pat.cols;
        if b == q {
            return true;
        }
        let remaining = q - b;
        let mut lo = start;
        let mut hi = self.host.cols - remaining;
        if let Some((fb, fj)) = self.forced {
            if b < fb {
                if fj < fb - b {
                    return false;
                }
                hi = hi.min(fj - (fb - b));
            } else if b == fb {
                if fj < lo || fj > hi {
                    return false;
                }
                lo = fj;
                hi = fj;
            }
        }
        if lo > hi {
            return false;
        }
        let w = self.words;
        let block = self.pat.rows * w;
        if self.pat.col_ones[b].is_empty() {
            // an all-zero pattern column constrains nothing; the leftmost slot dominates
            let (src, dst) = self.stack.split_at_mut((b + 1) * block);
            dst[..block].copy_from_slice(&src[b * block..]);
            return self.dfs(b + 1, lo + 1);
        }
        for j in lo..=hi {
            {
                let (src, dst) = self.stack.split_at_mut((b + 1) * block);
                let next = &mut dst[..block];
                next.copy_from_slice(&src[b * block..]);
                let col = self.host.column(j);
                for &a in &self.pat.col_ones[b] {
                    for (x, c) in next[a * w..(a + 1) * w].iter_mut().zip(col) {
                        *x &= c;
                    }
                }
            }
            if self.feasible(b + 1) && self.dfs(b + 1, j + 1) {
                return true;
            }
        }
        false
    }
}

fn fill_low_bits(mask: &mut [u64], n: usize) {
    for (k, w) in mask.iter_mut().enumerate() {
        let lo = k * WORD;
        *w = if n >= lo + WORD {
            u64::MAX
        } else if n > lo {
            (1u64 << (n - lo)) - 1
        } else {
            0
        };
    }
}

#[inline]
fn next_set_bit(mask: &[u64], pos: usize) -> Option<usize> {
    let mut k = pos / WORD;
    if k >= mask.len() {
        return None;
    }
    let mut w = mask[k] & (u64::MAX << (pos % WORD));
    loop {
        if w != 0 {
            return Some(k * WORD + w.trailing_zeros() as usize);
        }
        k += 1;
        if k == mask.len() {
            return None;
        }
        w = mask[k];
    }
}

pub(crate) fn contains(host: &Matrix01, pattern: &Matrix01) -> bool {
    let pat = CompiledPattern::new(pattern);
    contains_compiled(&ColumnBits::from_matrix(host), &pat)
}

pub(crate) fn contains_compiled(host: &ColumnBits, pat: &CompiledPattern) -> bool {
    pat.fits(host) && Search::new(host, pat, None).run()
}

/// Does some occurrence of `pat` map one of its ones onto host cell `(i, j)`?
///
/// If the host minus that cell avoided the pattern, this is exactly the
/// question of whether setting the cell created an occurrence.
pub(crate) fn contains_through(host: &ColumnBits, pat: &CompiledPattern, i: usize, j: usize) -> bool {
    if !pat.fits(host) {
        return false;
    }
    pat.ones.iter().any(|&(a, b)| {
        if a > i || pat.rows - a > host.rows - i || b > j || pat.cols - b > host.cols - j {
            return false;
        }
        let mut search = Search::new(host, pat, Some((b, j)));
        search.pin_row(a, i);
        search.run()
    })
}

/// Does some occurrence of `pat` use the host's last column as its last column?
pub(crate) fn contains_ending_at_last_column(host: &ColumnBits, pat: &CompiledPattern) -> bool {
    pat.fits(host) && Search::new(host, pat, Some((pat.cols - 1, host.cols - 1))).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_bit_crosses_words() {
        let mask = [0u64, 0b100, 0];
        assert_eq!(next_set_bit(&mask, 0), Some(66));
        assert_eq!(next_set_bit(&mask, 67), None);
        assert_eq!(next_set_bit(&[1], 1), None);
    }

    #[test]
    fn tall_hosts_use_multiword_masks() {
        let mut host = Matrix01::zeros(100, 3);
        host.set(3, 0, true);
        host.set(70, 1, true);
        host.set(99, 2, true);
        assert!(contains(&host, &Matrix01::identity(3)));
        assert!(!contains(&host, &Matrix01::identity(3).flip_h()));
    }

    #[test]
    fn through_cell_matches_difference() {
        let host = Matrix01::parse("101\n010\n101").unwrap();
        let pat = CompiledPattern::new(&Matrix01::parse("01\n10").unwrap());
        let bits = ColumnBits::from_matrix(&host);
        assert!(contains_through(&bits, &pat, 2, 0));
        assert!(!contains_through(&bits, &pat, 0, 0));
        assert!(contains_through(&bits, &pat, 1, 1));
    }

    #[test]
    fn zero_columns_and_rows_take_room() {
        let pat = Matrix01::parse("010\n000\n101").unwrap();
        assert!(!contains(&Matrix01::parse("010\n101").unwrap(), &pat));
        assert!(contains(&Matrix01::parse("0100\n0000\n1001").unwrap(), &pat));
        assert!(!contains(
            &Matrix01::parse("010\n111\n101").unwrap().select(&[0, 2], &[0, 1, 2]),
            &pat
        ));
    }

    #[test]
    fn last_column_anchor() {
        let mut bits = ColumnBits::new(2, 0);
        let pat = CompiledPattern::new(&Matrix01::identity(2));
        bits.push_column(&[0]);
        bits.push_column(&[0]);
        assert!(!contains_ending_at_last_column(&bits, &pat));
        bits.push_column(&[1]);
        assert!(contains_ending_at_last_column(&bits, &pat));
        bits.pop_column();
        assert_eq!(bits.to_matrix(), Matrix01::parse("11\n00").unwrap());
    }
}
