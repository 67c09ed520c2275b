use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

/// A generator label of a free associative algebra.
///
/// `u32` labels are the index alphabet `z_1..z_n` of the enveloping algebra
/// of the metabelian algebra; regular monomials label `R_u` in `U(B)`.
pub trait Letter: Clone + Ord + Hash + fmt::Debug + Send + Sync {
    fn write_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Letter for u32 {
    fn write_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{self}")
    }
}

/// A monomial of a free associative algebra; the empty word is `1`.
///
/// Ordered by length first, then lexicographically by letter order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word<L>(pub Vec<L>);

impl<L: Letter> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The lexicographically least rotation (Booth's algorithm).
    pub fn min_rotation(&self) -> Word<L> {
        let s = &self.0;
        let n = s.len();
        if n < 2 {
            return self.clone();
        }
        let at = |i: usize| &s[i % n];
        let mut fail: Vec<isize> = vec![-1; 2 * n];
        let mut k = 0usize;
        for j in 1..2 * n {
            let c = at(j);
            let mut i = fail[j - k - 1];
            while i != -1 && c != at(k + i as usize + 1) {
                if c < at(k + i as usize + 1) {
                    k = j - i as usize - 1;
                }
                i = fail[i as usize];
            }
            if i == -1 && c != at(k) {
                if c < at(k) {
                    k = j;
                }
                fail[j - k] = -1;
            } else {
                fail[j - k] = i + 1;
            }
        }
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&s[k..]);
        v.extend_from_slice(&s[..k]);
        Word(v)
    }
}

impl<L: Letter> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: Letter> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            l.write_label(f)?;
        }
        Ok(())
    }
}
