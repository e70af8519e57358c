/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Lexicographic indexing of the sorted `k`-subsets of `{1..n}`.
///
/// Subsets are 1-based sorted vectors; ranks run over `0..C(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    n: usize,
    k: usize,
}

impl SubsetIndex {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(k <= n, "subset size {k} exceeds ambient size {n}");
        SubsetIndex { n, k }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        binomial(self.n, self.k)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rank of a sorted 1-based subset; `None` if it is not a valid
    /// `k`-subset of `{1..n}`.
    pub fn rank(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.k {
            return None;
        }
        let mut r = 0;
        let mut prev = 0;
        for (pos, &x) in subset.iter().enumerate() {
            if x <= prev || x > self.n {
                return None;
            }
            // subsets that agree on the prefix and have a smaller element here
            for y in prev + 1..x {
                r += binomial(self.n - y, self.k - pos - 1);
            }
            prev = x;
        }
        Some(r)
    }

    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        assert!(r < self.len(), "rank {r} out of range");
        let mut out = Vec::with_capacity(self.k);
        let mut next = 1;
        for pos in 0..self.k {
            loop {
                let block = binomial(self.n - next, self.k - pos - 1);
                if r < block {
                    break;
                }
                r -= block;
                next += 1;
            }
            out.push(next);
            next += 1;
        }
        out
    }

    /// All subsets in rank order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter {
            n: self.n,
            cur: if self.k <= self.n {
                Some((1..=self.k).collect())
            } else {
                None
            },
        }
    }
}

pub struct SubsetIter {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.take()?;
        let k = out.len();
        let mut nxt = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - (k - 1 - i) {
                nxt[i] += 1;
                for j in i + 1..k {
                    nxt[j] = nxt[j - 1] + 1;
                }
                self.cur = Some(nxt);
                return Some(out);
            }
        }
        Some(out)
    }
}
