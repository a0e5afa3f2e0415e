//! Finitely supported linear combinations of basis elements with exact
//! rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::composition::Partition;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::set_partition::SetPartition;

/// Index type of a multiplicative basis `{h_k}` with `h_a h_b = h_{a·b}`.
pub trait BasisKey: Clone + Ord + fmt::Debug {
    /// Degree of `h_k`.
    fn degree(&self) -> usize;

    /// Key of the unit `h_∅ = 1`.
    fn unit() -> Self;

    /// Product on keys.
    fn product(&self, other: &Self) -> Self;

    /// Order in which printed terms appear.
    fn cmp_print(&self, other: &Self) -> Ordering;

    /// Text between the brackets of `h[...]`.
    fn key_text(&self) -> String;

    fn parse_key(s: &str) -> Result<Self>;
}

/// Commutative `h_λ` keyed by partitions.
impl BasisKey for Partition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        Partition::empty()
    }

    fn product(&self, other: &Self) -> Self {
        self.union(other)
    }

    fn cmp_print(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn key_text(&self) -> String {
        self.parts()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    fn parse_key(s: &str) -> Result<Self> {
        s.parse()
    }
}

/// Noncommutative `h_π` keyed by set partitions; the product is `π | σ`.
impl BasisKey for SetPartition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        SetPartition::empty()
    }

    fn product(&self, other: &Self) -> Self {
        self.slash_product(other)
    }

    fn cmp_print(&self, other: &Self) -> Ordering {
        self.cmp_term_order(other)
    }

    fn key_text(&self) -> String {
        self.to_string()
    }

    fn parse_key(s: &str) -> Result<Self> {
        s.parse()
    }
}

/// `Σ c_k h_k` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expansion<K: BasisKey> {
    terms: BTreeMap<K, Rational>,
}

impl<K: BasisKey> Default for Expansion<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: BasisKey> Expansion<K> {
    pub fn zero() -> Self {
        Expansion {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    /// The single basis element `h_key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coefficient: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(key, coefficient);
        e
    }

    /// Adds `coefficient · h_key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<K, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<K, Rational> {
        self.terms
    }

    pub fn coefficient(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms, or `None` for zero or inhomogeneous
    /// expansions.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(K::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Expansion {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }

    /// Bilinear extension of the key product. Order matters when the key
    /// product is noncommutative.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.product(b), x * y);
            }
        }
        out
    }

    /// Relabels every key. Coefficients of keys that collide are summed.
    pub fn map_keys(&self, mut f: impl FnMut(&K) -> K) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    fn print_order(&self) -> Vec<(&K, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp_print(b.0));
        v
    }

    /// One line per term, `coeff<TAB>key`, in print order.
    pub fn to_machine(&self) -> String {
        self.print_order()
            .into_iter()
            .map(|(k, c)| format!("{c}\t{}\n", k.key_text()))
            .collect()
    }
}

impl<K: BasisKey> fmt::Display for Expansion<K> {
    /// `1/2*h[12/3] - 1/6*h[123]`; unit coefficients are omitted and the
    /// zero expansion prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.print_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "h[{}]", k.key_text())?;
        }
        Ok(())
    }
}

impl<K: BasisKey> FromStr for Expansion<K> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = text;
        let mut first = true;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(Error::parse(rest, "unexpected leading `+`"));
                }
                rest = r;
            } else if !first {
                return Err(Error::parse(rest, "expected `+` or `-` between terms"));
            }
            rest = rest.trim_start();
            let open = rest
                .find("h[")
                .ok_or_else(|| Error::parse(rest, "expected `h[`"))?;
            let coeff_text = rest[..open].trim();
            let coefficient = if coeff_text.is_empty() {
                Rational::one()
            } else {
                let c = coeff_text
                    .strip_suffix('*')
                    .ok_or_else(|| Error::parse(coeff_text, "expected `*` after coefficient"))?
                    .trim();
                c.parse::<Rational>()
                    .map_err(|_| Error::parse(c, "expected a rational coefficient"))?
            };
            let after = &rest[open + 2..];
            let close = after
                .find(']')
                .ok_or_else(|| Error::parse(after, "missing `]`"))?;
            let key = K::parse_key(&after[..close])?;
            out.add_term(key, if negative { -coefficient } else { coefficient });
            rest = &after[close + 1..];
            first = false;
        }
        if first {
            return Err(Error::parse(s, "empty expansion"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    type NC = Expansion<SetPartition>;
    type Sym = Expansion<Partition>;

    #[test]
    fn printing() {
        let e: NC = "1/2*h[12/3] - 1/6*h[123]".parse().unwrap();
        assert_eq!(e.to_string(), "1/2*h[12/3] - 1/6*h[123]");
        assert_eq!(e.to_machine(), "1/2\t12/3\n-1/6\t123\n");
        let shuffled: NC = "-1/6*h[123] + 1/2*h[13/2]".parse().unwrap();
        assert_eq!(shuffled.to_string(), "1/2*h[13/2] - 1/6*h[123]");
        let s: Sym = "h[2,1] - h[3]".parse().unwrap();
        assert_eq!(s.to_string(), "h[2,1] - h[3]");
        assert_eq!(Sym::zero().to_string(), "0");
        assert_eq!(Sym::one().to_string(), "h[]");
        assert_eq!("-h[3]".parse::<Sym>().unwrap().to_string(), "-h[3]");
    }

    #[test]
    fn parse_errors_name_token() {
        match "1/2*h[12/3] - x*h[1]".parse::<NC>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        assert!("h[12/3".parse::<NC>().is_err());
        assert!("h[1] h[2]".parse::<Sym>().is_err());
        assert!("".parse::<Sym>().is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut e = Sym::basis("2,1".parse().unwrap());
        e.add_term("2,1".parse().unwrap(), integer(-1));
        assert!(e.is_zero());
        assert_eq!(e.degree(), None);
    }

    #[test]
    fn multiplication() {
        let a = NC::basis("1/24/3".parse().unwrap());
        let b = NC::basis("123/45".parse().unwrap());
        assert_eq!(a.mul(&b), NC::basis("1/24/3/567/89".parse().unwrap()));
        assert_ne!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&NC::one()), a);
        let x = Sym::basis("2".parse().unwrap());
        let y = Sym::basis("3,1".parse().unwrap());
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(x.mul(&y), Sym::basis("3,2,1".parse().unwrap()));
    }
}
