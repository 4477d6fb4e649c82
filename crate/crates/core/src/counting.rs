//! Counting methods: how much credit each author position of an article gets.
//!
//! Every method is a rule `weight(position, author_count)` returning an exact
//! non-negative rational. Total counting gives every author a full unit, so its
//! per-article sum is `c_a` and the weighted sizes coincide with `|cwP|` and
//! `|cwC|`. Fractional and first-author counting both hand out exactly one
//! unit per article, which makes their weighted proportions collapse to the
//! unweighted ones.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::corpus::{Article, AuthorGroup, Corpus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("no custom weights for articles with {0} authors")]
    MissingWeights(usize),
    #[error("weight {0} is negative")]
    NegativeWeight(String),
    #[error("weights for {count} authors must list {count} entries, found {found}")]
    WrongEntryCount { count: usize, found: usize },
    #[error("unknown counting method {0:?}")]
    UnknownMethod(String),
}

/// An exact non-negative rational amount of credit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn new(value: BigRational) -> Result<Self, CountingError> {
        if value.is_negative() {
            return Err(CountingError::NegativeWeight(value.to_string()));
        }
        Ok(Weight(value))
    }

    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn from_integer(n: u128) -> Self {
        Weight(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(numer: u64, denom: u64) -> Self {
        Weight(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Scales by a citation count.
    pub fn times(&self, n: u64) -> Weight {
        Weight(&self.0 * BigInt::from(n))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Weight {
    type Err = String;

    /// Accepts `p/q`, an integer or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value = BigRational::from_str(s.trim())
            .ok()
            .or_else(|| crate::decimal::parse_decimal(s))
            .ok_or_else(|| format!("invalid rational {s:?}"))?;
        Weight::new(value).map_err(|e| e.to_string())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        Weight(self.0 + &rhs.0)
    }
}

impl Mul for Weight {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight(self.0 * rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), Add::add)
    }
}

/// Position weights for custom counting, keyed by author count.
///
/// Entry `n` holds the weights of positions `1..=n` for an `n`-author article.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightTable {
    rows: BTreeMap<usize, Vec<Weight>>,
}

impl WeightTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the weights for `n`-author articles, where `n = weights.len()`.
    pub fn insert(&mut self, weights: Vec<Weight>) {
        self.rows.insert(weights.len(), weights);
    }

    /// Sets the weights for `count`-author articles, checking the length.
    pub fn insert_for(&mut self, count: usize, weights: Vec<Weight>) -> Result<(), CountingError> {
        if weights.len() != count {
            return Err(CountingError::WrongEntryCount {
                count,
                found: weights.len(),
            });
        }
        self.rows.insert(count, weights);
        Ok(())
    }

    pub fn row(&self, author_count: usize) -> Result<&[Weight], CountingError> {
        self.rows
            .get(&author_count)
            .map(Vec::as_slice)
            .ok_or(CountingError::MissingWeights(author_count))
    }

    pub fn author_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}

/// Rule assigning credit to each author position of an article.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountingMethod {
    /// Every co-author receives a full unit.
    Total,
    /// Each of `n` co-authors receives `1/n`.
    Fractional,
    /// The first-listed author receives the full unit.
    First,
    /// Position weights looked up in a table.
    Custom(WeightTable),
}

impl CountingMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CountingMethod::Total => "total",
            CountingMethod::Fractional => "fractional",
            CountingMethod::First => "first",
            CountingMethod::Custom(_) => "custom",
        }
    }

    /// Parses one of the built-in method names. `custom` needs a table and is
    /// built with [`CountingMethod::Custom`] directly.
    pub fn builtin(name: &str) -> Result<Self, CountingError> {
        match name {
            "total" => Ok(CountingMethod::Total),
            "fractional" => Ok(CountingMethod::Fractional),
            "first" => Ok(CountingMethod::First),
            other => Err(CountingError::UnknownMethod(other.to_string())),
        }
    }

    /// Credit for the author at 1-based `position` of an `author_count`-author
    /// article.
    pub fn weight(&self, position: usize, author_count: usize) -> Result<Weight, CountingError> {
        debug_assert!(position >= 1 && position <= author_count);
        Ok(match self {
            CountingMethod::Total => Weight::one(),
            CountingMethod::Fractional => Weight::ratio(1, author_count as u64),
            CountingMethod::First if position == 1 => Weight::one(),
            CountingMethod::First => Weight::zero(),
            CountingMethod::Custom(table) => table.row(author_count)?[position - 1].clone(),
        })
    }

    fn position_weights(&self, author_count: usize) -> Result<Vec<Weight>, CountingError> {
        (1..=author_count)
            .map(|i| self.weight(i, author_count))
            .collect()
    }
}

impl fmt::Display for CountingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Total credit one article hands out: `Σ_i weight(i, c_a)`.
pub fn article_weight(method: &CountingMethod, article: &Article) -> Result<Weight, CountingError> {
    match method {
        CountingMethod::Total => Ok(Weight::from_integer(article.author_count() as u128)),
        CountingMethod::Fractional | CountingMethod::First => Ok(Weight::one()),
        CountingMethod::Custom(_) => Ok(method
            .position_weights(article.author_count())?
            .into_iter()
            .sum()),
    }
}

/// Credit the article hands to the members of `group`.
pub fn group_article_weight(
    method: &CountingMethod,
    article: &Article,
    group: &AuthorGroup,
) -> Result<Weight, CountingError> {
    let n = article.author_count();
    let mut total = Weight::zero();
    for (i, author) in article.authors.iter().enumerate() {
        if group.contains(author) {
            total = total + method.weight(i + 1, n)?;
        }
    }
    Ok(total)
}

/// Generalized publication credit: `Σ_a article_weight(a)`.
pub fn weighted_publication_size(
    corpus: &Corpus,
    method: &CountingMethod,
) -> Result<Weight, CountingError> {
    corpus.articles().map(|a| article_weight(method, a)).sum()
}

/// Generalized citation credit: `Σ_a v_a · article_weight(a)`.
pub fn weighted_citation_size(
    corpus: &Corpus,
    method: &CountingMethod,
) -> Result<Weight, CountingError> {
    corpus
        .articles()
        .map(|a| article_weight(method, a).map(|w| w.times(a.citation_count)))
        .sum()
}

/// Publication and citation credit restricted to authorships in `group`.
pub fn group_weighted_sizes(
    corpus: &Corpus,
    method: &CountingMethod,
    group: &AuthorGroup,
) -> Result<(Weight, Weight), CountingError> {
    let mut publications = Weight::zero();
    let mut citations = Weight::zero();
    for article in corpus.articles() {
        let w = group_article_weight(method, article, group)?;
        citations = citations + w.times(article.citation_count);
        publications = publications + w;
    }
    Ok((publications, citations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::credit;

    fn article(n: usize, cites: u64) -> Article {
        Article::new("a", "A", (0..n).map(|i| format!("u{i}")), cites).unwrap()
    }

    #[test]
    fn per_article_weights() {
        let a = article(4, 0);
        assert_eq!(article_weight(&CountingMethod::Total, &a).unwrap(), Weight::from_integer(4));
        assert_eq!(article_weight(&CountingMethod::Fractional, &a).unwrap(), Weight::one());
        assert_eq!(article_weight(&CountingMethod::First, &a).unwrap(), Weight::one());
    }

    #[test]
    fn weighted_sizes_for_builtin_methods() {
        let corpus = Corpus::validate([
            Article::new("a", "A", ["x", "y"], 3).unwrap(),
            Article::new("b", "A", ["x", "y", "z"], 1).unwrap(),
        ])
        .unwrap();
        assert_eq!(
            weighted_publication_size(&corpus, &CountingMethod::Total).unwrap(),
            Weight::from_integer(5)
        );
        for m in [CountingMethod::Fractional, CountingMethod::First] {
            assert_eq!(weighted_publication_size(&corpus, &m).unwrap(), Weight::from_integer(2));
            assert_eq!(
                weighted_citation_size(&corpus, &m).unwrap(),
                Weight::from_integer(credit::size_citation(&corpus))
            );
        }
        assert_eq!(
            weighted_citation_size(&corpus, &CountingMethod::Total).unwrap(),
            Weight::from_integer(9)
        );
    }

    #[test]
    fn one_article_total_citations() {
        let corpus = Corpus::validate([article(2, 3)]).unwrap();
        assert_eq!(
            weighted_citation_size(&corpus, &CountingMethod::Total).unwrap(),
            Weight::from_integer(6)
        );
    }

    #[test]
    fn zero_custom_weights() {
        let mut table = WeightTable::new();
        table.insert(vec![Weight::zero(), Weight::zero()]);
        let corpus = Corpus::validate([article(2, 5)]).unwrap();
        let m = CountingMethod::Custom(table);
        assert!(weighted_citation_size(&corpus, &m).unwrap().is_zero());
    }

    #[test]
    fn missing_custom_row_is_an_error() {
        let mut table = WeightTable::new();
        table.insert(vec![Weight::one()]);
        let corpus = Corpus::validate([article(3, 1)]).unwrap();
        assert_eq!(
            weighted_publication_size(&corpus, &CountingMethod::Custom(table)).unwrap_err(),
            CountingError::MissingWeights(3)
        );
    }

    #[test]
    fn custom_position_weights_are_summed() {
        let mut table = WeightTable::new();
        table.insert(vec!["1/2".parse().unwrap(), "1/3".parse().unwrap(), "1/6".parse().unwrap()]);
        let a = article(3, 0);
        assert_eq!(article_weight(&CountingMethod::Custom(table), &a).unwrap(), Weight::one());
    }

    #[test]
    fn group_sizes() {
        let corpus = Corpus::validate([Article::new("a", "A", ["x", "y"], 2).unwrap()]).unwrap();
        let g = AuthorGroup::from_ids("g", ["x"]).unwrap();
        assert_eq!(
            group_weighted_sizes(&corpus, &CountingMethod::Total, &g).unwrap(),
            (Weight::from_integer(1), Weight::from_integer(2))
        );
        assert_eq!(
            group_weighted_sizes(&corpus, &CountingMethod::Fractional, &g).unwrap(),
            (Weight::ratio(1, 2), Weight::one())
        );
        let all = AuthorGroup::from_ids("g", ["x", "y"]).unwrap();
        assert_eq!(
            group_weighted_sizes(&corpus, &CountingMethod::Total, &all).unwrap(),
            (
                Weight::from_integer(credit::size_cw_publication(&corpus)),
                Weight::from_integer(credit::size_cw_citation(&corpus))
            )
        );
    }

    #[test]
    fn negative_weights_rejected() {
        assert!("-1/2".parse::<Weight>().is_err());
        assert!("3/4".parse::<Weight>().is_ok());
        assert!("x".parse::<Weight>().is_err());
        assert_eq!("0.25".parse::<Weight>().unwrap(), Weight::ratio(1, 4));
        assert!("-0.5".parse::<Weight>().is_err());
    }

    #[test]
    fn insert_for_checks_length() {
        let mut t = WeightTable::new();
        assert_eq!(
            t.insert_for(2, vec![Weight::one()]).unwrap_err(),
            CountingError::WrongEntryCount { count: 2, found: 1 }
        );
    }
}
