use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::ncpoly::Letter;

/// A regular (Shirshov) monomial of the free anticommutative algebra: a
/// binary tree whose left factor strictly exceeds its right factor at every
/// node.
///
/// Monomials are interned, so equality and hashing go through a stable
/// integer id. The same handle serves as the generator `R_u` of `U(B)`.
#[derive(Clone)]
pub struct Monomial(Arc<Node>);

struct Node {
    id: u32,
    degree: u32,
    max_index: u32,
    shape: Shape,
}

#[derive(Clone)]
pub enum Shape {
    Leaf(u32),
    Pair(Monomial, Monomial),
}

#[derive(PartialEq, Eq, Hash)]
enum Key {
    Leaf(u32),
    Pair(u32, u32),
}

#[derive(Default)]
struct Registry {
    by_key: HashMap<Key, Monomial>,
}

static REGISTRY: Lazy<RwLock<Registry>> = Lazy::new(Default::default);

fn intern(key: Key, make: impl FnOnce(u32) -> Node) -> Monomial {
    if let Some(m) = REGISTRY.read().by_key.get(&key) {
        return m.clone();
    }
    let mut reg = REGISTRY.write();
    let id = reg.by_key.len() as u32;
    reg.by_key
        .entry(key)
        .or_insert_with(|| Monomial(Arc::new(make(id))))
        .clone()
}

impl Monomial {
    /// The generator `ξ_i` (1-based).
    pub fn leaf(i: u32) -> Monomial {
        assert!(i >= 1, "variable indices start at 1");
        intern(Key::Leaf(i), |id| Node {
            id,
            degree: 1,
            max_index: i,
            shape: Shape::Leaf(i),
        })
    }

    /// The product node `(left, right)`; requires `left ≻ right`.
    pub fn pair(left: &Monomial, right: &Monomial) -> Result<Monomial> {
        if left <= right {
            return Err(Error::NotRegular {
                left: left.to_string(),
                right: right.to_string(),
            });
        }
        Ok(Self::pair_unchecked(left, right))
    }

    pub(crate) fn pair_unchecked(left: &Monomial, right: &Monomial) -> Monomial {
        debug_assert!(left > right);
        intern(Key::Pair(left.id(), right.id()), |id| Node {
            id,
            degree: left.0.degree + right.0.degree,
            max_index: left.0.max_index.max(right.0.max_index),
            shape: Shape::Pair(left.clone(), right.clone()),
        })
    }

    pub fn id(&self) -> u32 {
        self.0.id
    }

    pub fn degree(&self) -> usize {
        self.0.degree as usize
    }

    /// Largest variable index occurring.
    pub fn max_index(&self) -> u32 {
        self.0.max_index
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.0.shape, Shape::Leaf(_))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id().hash(state)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first; leaves by index; equal-degree products by left factor,
/// then right factor.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.id() == other.id() {
            return Ordering::Equal;
        }
        self.degree().cmp(&other.degree()).then_with(|| match (self.shape(), other.shape()) {
            (Shape::Leaf(a), Shape::Leaf(b)) => a.cmp(b),
            (Shape::Pair(u1, u2), Shape::Pair(v1, v2)) => u1.cmp(v1).then_with(|| u2.cmp(v2)),
            _ => unreachable!("equal degrees have equal shapes"),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape() {
            Shape::Leaf(i) => write!(f, "x{i}"),
            Shape::Pair(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Letter for Monomial {
    fn write_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{self}]")
    }
}

/// All regular monomials of degree `d` in rank `n`, ascending.
///
/// Built by pairing lower degrees: a product of degrees `d1 > d2` is always
/// regular, and equal degrees need `u ≻ v`.
pub fn enumerate_basis(n: usize, d: usize) -> Vec<Monomial> {
    let mut levels: Vec<Vec<Monomial>> = vec![Vec::new()];
    levels.push((1..=n as u32).map(Monomial::leaf).collect());
    for deg in 2..=d {
        let mut level = Vec::new();
        for d2 in 1..=deg / 2 {
            let d1 = deg - d2;
            for u in &levels[d1] {
                for v in &levels[d2] {
                    if d1 > d2 || u > v {
                        level.push(Monomial::pair_unchecked(u, v));
                    }
                }
            }
        }
        level.sort();
        levels.push(level);
    }
    levels.swap_remove(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(i: u32) -> Monomial {
        Monomial::leaf(i)
    }

    fn p(a: &Monomial, b: &Monomial) -> Monomial {
        Monomial::pair(a, b).unwrap()
    }

    #[test]
    fn order_examples() {
        assert!(xi(1) < xi(2));
        assert!(xi(3) < p(&xi(2), &xi(1)));
        assert!(p(&xi(2), &xi(1)) < p(&xi(3), &xi(1)));
        assert!(p(&xi(3), &xi(1)) < p(&xi(3), &xi(2)));
    }

    #[test]
    fn interning_shares_ids() {
        let a = p(&xi(3), &xi(2));
        let b = p(&xi(3), &xi(2));
        assert_eq!(a.id(), b.id());
        assert_ne!(a.id(), p(&xi(2), &xi(1)).id());
        assert_eq!(p(&a, &xi(1)).degree(), 3);
        assert_eq!(p(&a, &xi(1)).to_string(), "((x3*x2)*x1)");
    }

    #[test]
    fn irregular_pairs_rejected() {
        assert!(Monomial::pair(&xi(1), &xi(2)).is_err());
        assert!(Monomial::pair(&xi(1), &xi(1)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=5).map(|d| enumerate_basis(3, d).len()).collect();
        assert_eq!(counts[..4], [3, 3, 9, 30]);
        let d2: Vec<String> = enumerate_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(d2, ["(x2*x1)", "(x3*x1)", "(x3*x2)"]);
        for d in 1..=5 {
            let level = enumerate_basis(3, d);
            assert!(level.windows(2).all(|w| w[0] < w[1]));
            assert!(level.iter().all(|m| m.degree() == d));
        }
    }

    #[test]
    fn count_recursion() {
        // a_d = Σ_{d1>d2} a_{d1} a_{d2} + C(a_{d/2}, 2)
        let mut a = vec![0usize, 4];
        for d in 2..=6 {
            let mut s = 0;
            for d2 in 1..=d / 2 {
                let d1 = d - d2;
                if d1 > d2 {
                    s += a[d1] * a[d2];
                } else {
                    s += a[d1] * (a[d1] - 1) / 2;
                }
            }
            a.push(s);
        }
        for d in 1..=6 {
            assert_eq!(enumerate_basis(4, d).len(), a[d]);
        }
    }
}
