//! Indexed indeterminates.
//!
//! A symbol is a short base name plus zero, one or two small non-negative
//! indices, e.g. `x1`, `mu(3)`, `a(2,1)`. Symbols are interned so that they
//! are `Copy` and cheap to compare; the total order is lexicographic on
//! (base, indices) and is stable across runs.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Mutex;

static INTERNED: Mutex<BTreeSet<&'static str>> = Mutex::new(BTreeSet::new());

/// Intern a base name, returning a `'static` reference with stable content.
fn intern(name: &str) -> &'static str {
    let mut set = INTERNED.lock().unwrap();
    if let Some(s) = set.get(name) {
        return s;
    }
    let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
    set.insert(leaked);
    leaked
}

/// Index part of a symbol: zero, one or two small non-negative integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Indices {
    None,
    One(u16),
    Two(u16, u16),
}

/// An indexed indeterminate.
///
/// Equality and ordering are by (base, indices); `Ord` on `&str` compares
/// content, so the order is deterministic regardless of interning history.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexedSymbol {
    base: &'static str,
    indices: Indices,
}

impl IndexedSymbol {
    /// A symbol with no indices, e.g. `x1` or `w`.
    pub fn plain(base: &str) -> Self {
        IndexedSymbol {
            base: intern(base),
            indices: Indices::None,
        }
    }

    /// A symbol with one index, e.g. `mu(3)`.
    pub fn one(base: &str, i: usize) -> Self {
        IndexedSymbol {
            base: intern(base),
            indices: Indices::One(i as u16),
        }
    }

    /// A symbol with two indices, e.g. `a(2,1)`.
    pub fn two(base: &str, i: usize, j: usize) -> Self {
        IndexedSymbol {
            base: intern(base),
            indices: Indices::Two(i as u16, j as u16),
        }
    }

    pub fn base(&self) -> &'static str {
        self.base
    }

    pub fn indices(&self) -> Indices {
        self.indices
    }
}

impl fmt::Display for IndexedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.indices {
            Indices::None => write!(f, "{}", self.base),
            Indices::One(i) => write!(f, "{}({})", self.base, i),
            Indices::Two(i, j) => write!(f, "{}({},{})", self.base, i, j),
        }
    }
}

impl fmt::Debug for IndexedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
