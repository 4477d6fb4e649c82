//! The four credit spaces of a set of articles.
//!
//! Each space is a finite set of tuples, one tuple per unit of credit:
//!
//! | kind | point | size |
//! |------|-------|------|
//! | `P`   | `(article)` | `Σ 1` |
//! | `cwP` | `(article, author)` | `Σ c_a` |
//! | `C`   | `(article, citation)` | `Σ v_a` |
//! | `cwC` | `(article, author, citation)` | `Σ v_a·c_a` |
//!
//! [`build_space`] materializes the tuples; the `size_*` functions compute the
//! same cardinalities in closed form and are what the indicators use.

use std::fmt;

use crate::corpus::{restrict_authors, Article, AuthorGroup, AuthorId, Corpus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CreditSpaceKind {
    /// `P_A`: one point per article.
    Publication,
    /// `cwP_A`: one point per authorship (total author counting).
    CoauthorWeightedPublication,
    /// `C_A`: one point per citation.
    Citation,
    /// `cwC_A`: one point per (author, citation) pair (authors times citations).
    CoauthorWeightedCitation,
}

impl CreditSpaceKind {
    pub const ALL: [CreditSpaceKind; 4] = [
        CreditSpaceKind::Publication,
        CreditSpaceKind::CoauthorWeightedPublication,
        CreditSpaceKind::Citation,
        CreditSpaceKind::CoauthorWeightedCitation,
    ];

    pub fn is_coauthor_weighted(self) -> bool {
        matches!(
            self,
            CreditSpaceKind::CoauthorWeightedPublication | CreditSpaceKind::CoauthorWeightedCitation
        )
    }

    pub fn is_citation(self) -> bool {
        matches!(
            self,
            CreditSpaceKind::Citation | CreditSpaceKind::CoauthorWeightedCitation
        )
    }

    /// Closed-form size of this space over `corpus`.
    pub fn size(self, corpus: &Corpus) -> u128 {
        match self {
            CreditSpaceKind::Publication => size_publication(corpus),
            CreditSpaceKind::CoauthorWeightedPublication => size_cw_publication(corpus),
            CreditSpaceKind::Citation => size_citation(corpus),
            CreditSpaceKind::CoauthorWeightedCitation => size_cw_citation(corpus),
        }
    }
}

impl fmt::Display for CreditSpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CreditSpaceKind::Publication => "P",
            CreditSpaceKind::CoauthorWeightedPublication => "cwP",
            CreditSpaceKind::Citation => "C",
            CreditSpaceKind::CoauthorWeightedCitation => "cwC",
        })
    }
}

/// One unit of credit. Citations are indexed `1..=v_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CreditPoint {
    pub article_id: String,
    pub author: Option<AuthorId>,
    pub citation_index: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CreditSpace {
    kind: CreditSpaceKind,
    points: Vec<CreditPoint>,
}

impl CreditSpace {
    pub fn kind(&self) -> CreditSpaceKind {
        self.kind
    }

    pub fn points(&self) -> &[CreditPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points whose author entry lies in `group` (`gcwP_A` or `gcwC_A`).
    ///
    /// Empty for spaces without an author coordinate.
    pub fn restrict_to_group<'a>(
        &'a self,
        group: &'a AuthorGroup,
    ) -> impl Iterator<Item = &'a CreditPoint> + 'a {
        self.points
            .iter()
            .filter(move |p| p.author.as_ref().is_some_and(|a| group.contains(a)))
    }
}

/// Lazily enumerates the points `article` contributes to a space of `kind`.
pub fn article_points(
    article: &Article,
    kind: CreditSpaceKind,
) -> impl Iterator<Item = CreditPoint> + '_ {
    let authors: Vec<Option<&AuthorId>> = if kind.is_coauthor_weighted() {
        article.authors.iter().map(Some).collect()
    } else {
        vec![None]
    };
    let citations: Vec<Option<u64>> = if kind.is_citation() {
        (1..=article.citation_count).map(Some).collect()
    } else {
        vec![None]
    };
    authors.into_iter().flat_map(move |author| {
        citations.clone().into_iter().map(move |citation_index| CreditPoint {
            article_id: article.id.clone(),
            author: author.cloned(),
            citation_index,
        })
    })
}

/// Enumerates every point of the `kind` credit space over `corpus`.
pub fn build_space(corpus: &Corpus, kind: CreditSpaceKind) -> CreditSpace {
    let points = corpus
        .articles()
        .flat_map(|a| article_points(a, kind))
        .collect();
    CreditSpace { kind, points }
}

/// `|P_A| = Σ 1`.
pub fn size_publication(corpus: &Corpus) -> u128 {
    corpus.len() as u128
}

/// `|cwP_A| = Σ c_a`.
pub fn size_cw_publication(corpus: &Corpus) -> u128 {
    corpus.articles().map(|a| a.author_count() as u128).sum()
}

/// `|C_A| = Σ v_a`.
pub fn size_citation(corpus: &Corpus) -> u128 {
    corpus.articles().map(|a| a.citation_count as u128).sum()
}

/// `|cwC_A| = Σ v_a·c_a`.
pub fn size_cw_citation(corpus: &Corpus) -> u128 {
    corpus
        .articles()
        .map(|a| a.citation_count as u128 * a.author_count() as u128)
        .sum()
}

/// `|gcwP_A| = Σ c_aG`.
pub fn size_group_cw_publication(corpus: &Corpus, group: &AuthorGroup) -> u128 {
    corpus
        .articles()
        .map(|a| restrict_authors(a, group) as u128)
        .sum()
}

/// `|gcwC_A| = Σ v_a·c_aG`.
pub fn size_group_cw_citation(corpus: &Corpus, group: &AuthorGroup) -> u128 {
    corpus
        .articles()
        .map(|a| a.citation_count as u128 * restrict_authors(a, group) as u128)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn corpus(rows: &[(&str, &[&str], u64)]) -> Corpus {
        Corpus::validate(
            rows.iter()
                .map(|(id, authors, v)| Article::new(*id, "A", authors.iter().copied(), *v).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn cwc_enumerates_triple_product() {
        let c = corpus(&[("a1", &["u", "w"], 3)]);
        let space = build_space(&c, CreditSpaceKind::CoauthorWeightedCitation);
        let got: BTreeSet<(String, String, u64)> = space
            .points()
            .iter()
            .map(|p| {
                (
                    p.article_id.clone(),
                    p.author.as_ref().unwrap().to_string(),
                    p.citation_index.unwrap(),
                )
            })
            .collect();
        let mut want = BTreeSet::new();
        for author in ["u", "w"] {
            for i in 1..=3 {
                want.insert(("a1".to_string(), author.to_string(), i));
            }
        }
        assert_eq!(got, want);
        assert_eq!(space.len(), 6);
    }

    #[test]
    fn zero_citations_give_empty_citation_space() {
        let c = corpus(&[("a1", &["x"], 0)]);
        assert!(build_space(&c, CreditSpaceKind::Citation).is_empty());
        assert_eq!(size_citation(&c), 0);
    }

    #[test]
    fn cwp_has_one_point_per_authorship() {
        let c = corpus(&[("a1", &["x", "y", "z"], 5)]);
        assert_eq!(build_space(&c, CreditSpaceKind::CoauthorWeightedPublication).len(), 3);
        assert_eq!(size_cw_publication(&c), 3);
    }

    #[test]
    fn point_shapes_match_kind() {
        let c = corpus(&[("a1", &["x", "y"], 2)]);
        for kind in CreditSpaceKind::ALL {
            for p in build_space(&c, kind).points() {
                assert_eq!(p.author.is_some(), kind.is_coauthor_weighted());
                assert_eq!(p.citation_index.is_some(), kind.is_citation());
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(size_publication(&Corpus::empty()), 0);
        let c = corpus(&[("a", &["x", "y"], 3), ("b", &["x", "y", "z"], 0), ("c", &["q"], 7)]);
        assert_eq!(size_publication(&c), 3);
        assert_eq!(size_cw_publication(&c), 6);
        assert_eq!(size_citation(&c), 10);
        assert_eq!(size_cw_citation(&c), 3 * 2 + 7);
    }

    #[test]
    fn group_sizes() {
        let c = corpus(&[("a", &["x", "y"], 1), ("b", &["y", "z"], 1)]);
        let g = AuthorGroup::from_ids("g", ["y"]).unwrap();
        assert_eq!(size_group_cw_publication(&c, &g), 2);

        let c = corpus(&[("a", &["x", "y", "z"], 4)]);
        let g = AuthorGroup::from_ids("g", ["x", "y"]).unwrap();
        assert_eq!(size_group_cw_citation(&c, &g), 8);
        let space = build_space(&c, CreditSpaceKind::CoauthorWeightedCitation);
        assert_eq!(space.restrict_to_group(&g).count(), 8);

        let everyone = AuthorGroup::from_ids("all", ["x", "y", "z"]).unwrap();
        assert_eq!(size_group_cw_citation(&c, &everyone), size_cw_citation(&c));
        let nobody = AuthorGroup::from_ids("none", ["q"]).unwrap();
        assert_eq!(size_group_cw_publication(&c, &nobody), 0);
    }
}
