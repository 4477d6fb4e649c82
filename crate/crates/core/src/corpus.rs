//! Articles, author groups and validated corpora.
//!
//! A [`Corpus`] is the only way the rest of the crate sees publication data.
//! Every invariant (unique ids, non-empty author lists without repeats, one
//! subfield label per article) is checked once in [`Corpus::validate`], after
//! which the value is immutable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Errors raised while building domain values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("duplicate article id {0:?}")]
    DuplicateArticleId(String),
    #[error("article {0:?} has an empty author list")]
    EmptyAuthorList(String),
    #[error("article {0:?} lists author {1:?} more than once")]
    DuplicateAuthor(String, String),
    #[error("article {0:?} has a negative citation count")]
    NegativeCitations(String),
    #[error("article id must be non-empty")]
    EmptyArticleId,
    #[error("article {0:?} has an empty subfield label")]
    EmptySubfield(String),
    #[error("invalid author id {0:?}: must be non-empty without surrounding whitespace")]
    InvalidAuthorId(String),
    #[error("unknown subfield {0:?}")]
    UnknownSubfield(String),
    #[error("group name must be non-empty")]
    EmptyGroupName,
    #[error("group {0:?} has no members")]
    EmptyGroup(String),
}

/// Opaque author identifier.
///
/// Identity is the exact byte string; no name normalization is attempted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuthorId(String);

impl AuthorId {
    pub fn new(value: impl Into<String>) -> Result<Self, CorpusError> {
        let value = value.into();
        if value.is_empty() || value.trim() != value {
            return Err(CorpusError::InvalidAuthorId(value));
        }
        Ok(AuthorId(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AuthorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One publication: id, subfield label, ordered authors and citation count.
///
/// Author order is only read by first-author counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Article {
    pub id: String,
    pub subfield: String,
    pub authors: Vec<AuthorId>,
    pub citation_count: u64,
}

impl Article {
    /// Builds an article from plain strings, checking every author id.
    ///
    /// Structural checks (empty or repeated authors) happen in
    /// [`Corpus::validate`].
    pub fn new<I, S>(
        id: impl Into<String>,
        subfield: impl Into<String>,
        authors: I,
        citation_count: u64,
    ) -> Result<Self, CorpusError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let authors = authors
            .into_iter()
            .map(AuthorId::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Article {
            id: id.into(),
            subfield: subfield.into(),
            authors,
            citation_count,
        })
    }

    /// Number of co-authors, `c_a`.
    pub fn author_count(&self) -> usize {
        self.authors.len()
    }

    /// Number of this article's co-authors that belong to `group` (`c_aG`).
    pub fn group_author_count(&self, group: &AuthorGroup) -> usize {
        restrict_authors(self, group)
    }

    fn check(&self) -> Result<(), CorpusError> {
        if self.id.is_empty() {
            return Err(CorpusError::EmptyArticleId);
        }
        if self.subfield.is_empty() {
            return Err(CorpusError::EmptySubfield(self.id.clone()));
        }
        if self.authors.is_empty() {
            return Err(CorpusError::EmptyAuthorList(self.id.clone()));
        }
        let mut seen = BTreeSet::new();
        for author in &self.authors {
            if !seen.insert(author) {
                return Err(CorpusError::DuplicateAuthor(
                    self.id.clone(),
                    author.to_string(),
                ));
            }
        }
        Ok(())
    }
}

/// A named, non-empty set of authors: a department, institution, country...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorGroup {
    name: String,
    members: BTreeSet<AuthorId>,
}

impl AuthorGroup {
    pub fn new(
        name: impl Into<String>,
        members: impl IntoIterator<Item = AuthorId>,
    ) -> Result<Self, CorpusError> {
        let name = name.into();
        if name.is_empty() {
            return Err(CorpusError::EmptyGroupName);
        }
        let members: BTreeSet<_> = members.into_iter().collect();
        if members.is_empty() {
            return Err(CorpusError::EmptyGroup(name));
        }
        Ok(AuthorGroup { name, members })
    }

    /// Convenience constructor from string ids.
    pub fn from_ids<I, S>(name: impl Into<String>, ids: I) -> Result<Self, CorpusError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let members = ids
            .into_iter()
            .map(AuthorId::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(name, members)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &BTreeSet<AuthorId> {
        &self.members
    }

    pub fn contains(&self, author: &AuthorId) -> bool {
        self.members.contains(author)
    }
}

/// A validated set of articles partitioned by subfield label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    articles: BTreeMap<String, Article>,
    subfields: BTreeSet<String>,
}

impl Corpus {
    /// Checks every invariant and builds the corpus.
    pub fn validate(raw_articles: impl IntoIterator<Item = Article>) -> Result<Self, CorpusError> {
        let mut articles = BTreeMap::new();
        let mut subfields = BTreeSet::new();
        for article in raw_articles {
            article.check()?;
            if articles.contains_key(&article.id) {
                return Err(CorpusError::DuplicateArticleId(article.id));
            }
            subfields.insert(article.subfield.clone());
            articles.insert(article.id.clone(), article);
        }
        Ok(Corpus {
            articles,
            subfields,
        })
    }

    pub fn empty() -> Self {
        Corpus::default()
    }

    /// Articles in id order.
    pub fn articles(&self) -> impl DoubleEndedIterator<Item = &Article> + ExactSizeIterator + Clone {
        self.articles.values()
    }

    pub fn get(&self, id: &str) -> Option<&Article> {
        self.articles.get(id)
    }

    pub fn len(&self) -> usize {
        self.articles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.articles.is_empty()
    }

    /// Distinct subfield labels in lexicographic order.
    pub fn subfields(&self) -> &BTreeSet<String> {
        &self.subfields
    }

    /// Sub-corpus of the articles labelled `label`.
    pub fn subset_by_subfield(&self, label: &str) -> Result<Corpus, CorpusError> {
        if !self.subfields.contains(label) {
            return Err(CorpusError::UnknownSubfield(label.to_string()));
        }
        Ok(self.filter(|a| a.subfield == label))
    }

    /// Sub-corpus of the articles with at least one co-author in `group`.
    pub fn subset_by_group(&self, group: &AuthorGroup) -> Corpus {
        self.filter(|a| restrict_authors(a, group) > 0)
    }

    /// Sub-corpus of the articles satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Article) -> bool) -> Corpus {
        let articles: BTreeMap<_, _> = self
            .articles
            .iter()
            .filter(|(_, a)| keep(a))
            .map(|(k, a)| (k.clone(), a.clone()))
            .collect();
        let subfields = articles.values().map(|a| a.subfield.clone()).collect();
        Corpus {
            articles,
            subfields,
        }
    }

    /// Returns the id of the first article of `self` that is not also in
    /// `universe` (with identical content), if any.
    pub fn first_outside<'a>(&'a self, universe: &Corpus) -> Option<&'a str> {
        self.articles
            .iter()
            .find(|(id, a)| universe.articles.get(*id) != Some(*a))
            .map(|(id, _)| id.as_str())
    }

    pub fn is_subset_of(&self, universe: &Corpus) -> bool {
        self.first_outside(universe).is_none()
    }

    pub fn into_articles(self) -> impl Iterator<Item = Article> {
        self.articles.into_values()
    }
}

/// `c_aG`: how many of the article's co-authors are members of `group`.
pub fn restrict_authors(article: &Article, group: &AuthorGroup) -> usize {
    article.authors.iter().filter(|a| group.contains(a)).count()
}
