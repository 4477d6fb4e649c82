//! Proportion indicators over a universe of articles.
//!
//! For `A ⊆ U`:
//!
//! * `AP = |P_A| / |P_U|` and `WAP = |cwP_A| / |cwP_U|`
//! * `CP = |C_A| / |C_U|` and `WCP = |cwC_A| / |cwC_U|`
//! * `GWAP = |gcwP_A| / |cwP_U|` and `GWCP = |gcwC_A| / |cwC_U|`
//!
//! The weighted forms take any [`CountingMethod`]; with
//! [`CountingMethod::Total`] they are exactly the credit-space ratios above.
//! All values are exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{AuthorGroup, Corpus};
use crate::counting::{
    group_weighted_sizes, weighted_citation_size, weighted_publication_size, CountingError,
    CountingMethod,
};
use crate::credit;
use crate::decimal::format_decimal;

/// Which credit universe had zero size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Universe {
    Publication,
    WeightedPublication,
    Citation,
    WeightedCitation,
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Universe::Publication => "publication",
            Universe::WeightedPublication => "weighted publication",
            Universe::Citation => "citation",
            Universe::WeightedCitation => "weighted citation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndicatorError {
    #[error("empty {0} universe")]
    EmptyUniverse(Universe),
    #[error("article {0:?} is not part of the universe")]
    NotASubset(String),
    #[error("article {0:?} has no co-author in group {1:?}")]
    GroupMismatch(String, String),
    #[error("malformed fixture: {0}")]
    MalformedFixture(String),
    #[error(transparent)]
    Counting(#[from] CountingError),
}

/// Publication or citation side of an indicator pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Publication,
    Citation,
}

impl Mode {
    /// Column names of the unweighted, weighted and group indicators.
    pub fn labels(self) -> (&'static str, &'static str, &'static str) {
        match self {
            Mode::Publication => ("AP", "WAP", "GWAP"),
            Mode::Citation => ("CP", "WCP", "GWCP"),
        }
    }
}

/// An exact share in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Proportion(BigRational);

impl Proportion {
    fn of(part: BigRational, whole: &BigRational) -> Self {
        let value = part / whole;
        debug_assert!(!value.is_negative() && value <= BigRational::one());
        Proportion(value)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Proportion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn int(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ensure_subset(a: &Corpus, u: &Corpus) -> Result<(), IndicatorError> {
    match a.first_outside(u) {
        Some(id) => Err(IndicatorError::NotASubset(id.to_string())),
        None => Ok(()),
    }
}

fn nonzero(total: BigRational, universe: Universe) -> Result<BigRational, IndicatorError> {
    if total.is_zero() {
        Err(IndicatorError::EmptyUniverse(universe))
    } else {
        Ok(total)
    }
}

fn publication_universe(u: &Corpus) -> Result<BigRational, IndicatorError> {
    nonzero(int(credit::size_publication(u)), Universe::Publication)
}

fn citation_universe(u: &Corpus) -> Result<BigRational, IndicatorError> {
    nonzero(int(credit::size_citation(u)), Universe::Citation)
}

fn weighted_publication_universe(
    u: &Corpus,
    method: &CountingMethod,
) -> Result<BigRational, IndicatorError> {
    nonzero(
        weighted_publication_size(u, method)?.into_inner(),
        Universe::WeightedPublication,
    )
}

fn weighted_citation_universe(
    u: &Corpus,
    method: &CountingMethod,
) -> Result<BigRational, IndicatorError> {
    nonzero(
        weighted_citation_size(u, method)?.into_inner(),
        Universe::WeightedCitation,
    )
}

/// Article proportion `|P_A| / |P_U|`.
pub fn ap(a: &Corpus, u: &Corpus) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    let whole = publication_universe(u)?;
    Ok(Proportion::of(int(credit::size_publication(a)), &whole))
}

/// Weighted article proportion under `method`.
pub fn wap(a: &Corpus, u: &Corpus, method: &CountingMethod) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    let whole = weighted_publication_universe(u, method)?;
    Ok(Proportion::of(
        weighted_publication_size(a, method)?.into_inner(),
        &whole,
    ))
}

/// Citation proportion `|C_A| / |C_U|`.
pub fn cp(a: &Corpus, u: &Corpus) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    let whole = citation_universe(u)?;
    Ok(Proportion::of(int(credit::size_citation(a)), &whole))
}

/// Weighted citation proportion under `method`.
pub fn wcp(a: &Corpus, u: &Corpus, method: &CountingMethod) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    let whole = weighted_citation_universe(u, method)?;
    Ok(Proportion::of(
        weighted_citation_size(a, method)?.into_inner(),
        &whole,
    ))
}

fn ensure_group_articles(a: &Corpus, group: &AuthorGroup) -> Result<(), IndicatorError> {
    match a.articles().find(|art| art.group_author_count(group) == 0) {
        Some(art) => Err(IndicatorError::GroupMismatch(
            art.id.clone(),
            group.name().to_string(),
        )),
        None => Ok(()),
    }
}

/// Share of the whole weighted publication space credited to `group`.
///
/// `a` must hold only articles of `u` with at least one co-author in `group`;
/// [`Corpus::subset_by_group`] builds it.
pub fn gwap(
    a: &Corpus,
    u: &Corpus,
    group: &AuthorGroup,
    method: &CountingMethod,
) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    ensure_group_articles(a, group)?;
    let whole = weighted_publication_universe(u, method)?;
    let (publications, _) = group_weighted_sizes(a, method, group)?;
    Ok(Proportion::of(publications.into_inner(), &whole))
}

/// Share of the whole weighted citation space credited to `group`.
pub fn gwcp(
    a: &Corpus,
    u: &Corpus,
    group: &AuthorGroup,
    method: &CountingMethod,
) -> Result<Proportion, IndicatorError> {
    ensure_subset(a, u)?;
    ensure_group_articles(a, group)?;
    let whole = weighted_citation_universe(u, method)?;
    let (_, citations) = group_weighted_sizes(a, method, group)?;
    Ok(Proportion::of(citations.into_inner(), &whole))
}

/// One subfield's unweighted and weighted shares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldRow {
    pub label: String,
    pub unweighted: Proportion,
    pub weighted: Proportion,
    /// `weighted / unweighted`, `None` when the unweighted share is zero.
    pub ratio: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorReport {
    pub mode: Mode,
    pub method: CountingMethod,
    /// One row per subfield label, sorted by label.
    pub rows: Vec<SubfieldRow>,
}

/// Per-subfield comparison of unweighted and weighted shares of `u`.
pub fn report(
    u: &Corpus,
    mode: Mode,
    method: &CountingMethod,
) -> Result<IndicatorReport, IndicatorError> {
    let (plain_whole, weighted_whole) = match mode {
        Mode::Publication => (
            publication_universe(u)?,
            weighted_publication_universe(u, method)?,
        ),
        Mode::Citation => (
            citation_universe(u)?,
            weighted_citation_universe(u, method)?,
        ),
    };
    let mut rows = Vec::with_capacity(u.subfields().len());
    for label in u.subfields() {
        let a = u.filter(|art| &art.subfield == label);
        let (plain, weighted) = match mode {
            Mode::Publication => (
                int(credit::size_publication(&a)),
                weighted_publication_size(&a, method)?.into_inner(),
            ),
            Mode::Citation => (
                int(credit::size_citation(&a)),
                weighted_citation_size(&a, method)?.into_inner(),
            ),
        };
        let unweighted = Proportion::of(plain, &plain_whole);
        let weighted = Proportion::of(weighted, &weighted_whole);
        let ratio = (!unweighted.is_zero()).then(|| weighted.value() / unweighted.value());
        rows.push(SubfieldRow {
            label: label.clone(),
            unweighted,
            weighted,
            ratio,
        });
    }
    Ok(IndicatorReport {
        mode,
        method: method.clone(),
        rows,
    })
}

/// Department totals under total author counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NrcStats {
    /// `Σ c_aG`: every departmental co-authorship counts once.
    pub allocated_publications: u128,
    /// `Σ v_a·c_aG`: each departmental co-author carries the full citation count.
    pub allocated_citations: u128,
    /// `None` when the department has no authorships.
    pub cites_per_publication: Option<BigRational>,
}

impl NrcStats {
    /// Publications per allocated faculty member per year.
    pub fn publications_per_faculty(&self, faculty: u64, years: u64) -> Option<BigRational> {
        let denom = faculty as u128 * years as u128;
        (denom > 0).then(|| BigRational::new(BigInt::from(self.allocated_publications), BigInt::from(denom)))
    }
}

pub fn nrc_department_stats(corpus: &Corpus, department: &AuthorGroup) -> NrcStats {
    let allocated_publications = credit::size_group_cw_publication(corpus, department);
    let allocated_citations = credit::size_group_cw_citation(corpus, department);
    let cites_per_publication = (allocated_publications > 0).then(|| {
        BigRational::new(
            BigInt::from(allocated_citations),
            BigInt::from(allocated_publications),
        )
    });
    NrcStats {
        allocated_publications,
        allocated_citations,
        cites_per_publication,
    }
}

/// A published indicator row: label, unweighted share, weighted share, ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub label: String,
    pub unweighted: BigRational,
    pub weighted: BigRational,
    pub ratio: BigRational,
}

/// Outcome of one consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: BigRational,
    pub observed: BigRational,
    pub residual: BigRational,
    pub tolerance: BigRational,
    pub passed: bool,
}

impl Check {
    fn new(name: String, expected: BigRational, observed: BigRational, tolerance: &BigRational) -> Self {
        let residual = (&observed - &expected).abs();
        let passed = residual <= *tolerance;
        Check {
            name,
            expected,
            observed,
            residual,
            tolerance: tolerance.clone(),
            passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    name: &'a str,
    expected: String,
    observed: String,
    residual: String,
    tolerance: String,
    status: &'static str,
    expected_exact: String,
    observed_exact: String,
    residual_exact: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check: name, expected, observed, residual, PASS/FAIL.
    ///
    /// Expected and observed use `decimals` places; residuals get three more.
    pub fn render_text(&self, decimals: usize) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<width$}  expected {}  observed {}  residual {}  {}\n",
                c.name,
                format_decimal(&c.expected, decimals),
                format_decimal(&c.observed, decimals),
                format_decimal(&c.residual, decimals + 3),
                if c.passed { "PASS" } else { "FAIL" },
            ));
        }
        out
    }

    /// One JSON object per line, with exact values alongside the decimals.
    pub fn render_json_lines(&self, decimals: usize) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let record = CheckRecord {
                name: &c.name,
                expected: format_decimal(&c.expected, decimals),
                observed: format_decimal(&c.observed, decimals),
                residual: format_decimal(&c.residual, decimals + 3),
                tolerance: format_decimal(&c.tolerance, decimals + 3),
                status: if c.passed { "PASS" } else { "FAIL" },
                expected_exact: c.expected.to_string(),
                observed_exact: c.observed.to_string(),
                residual_exact: c.residual.to_string(),
            };
            out.push_str(&serde_json::to_string(&record).expect("plain strings serialize"));
            out.push('\n');
        }
        out
    }
}

/// Checks a published table for internal consistency.
///
/// Each row's printed ratio must match `weighted / unweighted` within
/// `tol_ratio`, and each column must sum to one within `tol_sum`.
pub fn check_fixture_table(
    rows: &[FixtureRow],
    tol_ratio: &BigRational,
    tol_sum: &BigRational,
) -> Result<CheckResult, IndicatorError> {
    if rows.is_empty() {
        return Err(IndicatorError::MalformedFixture("no rows".into()));
    }
    if tol_ratio.is_negative() || tol_sum.is_negative() {
        return Err(IndicatorError::MalformedFixture("negative tolerance".into()));
    }
    let unit = BigRational::one();
    let mut labels = std::collections::BTreeSet::new();
    for row in rows {
        if !labels.insert(row.label.as_str()) {
            return Err(IndicatorError::MalformedFixture(format!(
                "duplicate label {:?}",
                row.label
            )));
        }
        for value in [&row.unweighted, &row.weighted] {
            if value.is_negative() || *value > unit {
                return Err(IndicatorError::MalformedFixture(format!(
                    "row {:?}: proportion {} outside [0, 1]",
                    row.label, value
                )));
            }
        }
        if row.unweighted.is_zero() {
            return Err(IndicatorError::MalformedFixture(format!(
                "row {:?}: zero unweighted share leaves the ratio undefined",
                row.label
            )));
        }
    }

    let mut checks: Vec<Check> = rows
        .iter()
        .map(|row| {
            Check::new(
                format!("ratio[{}]", row.label),
                row.ratio.clone(),
                &row.weighted / &row.unweighted,
                tol_ratio,
            )
        })
        .collect();
    let sum_unweighted: BigRational = rows.iter().map(|r| r.unweighted.clone()).sum();
    let sum_weighted: BigRational = rows.iter().map(|r| r.weighted.clone()).sum();
    checks.push(Check::new("sum[unweighted]".into(), unit.clone(), sum_unweighted, tol_sum));
    checks.push(Check::new("sum[weighted]".into(), unit, sum_weighted, tol_sum));
    Ok(CheckResult { checks })
}

/// Exact sums of the unweighted and weighted columns.
pub fn column_sums(report: &IndicatorReport) -> (BigRational, BigRational) {
    report.rows.iter().fold(
        (BigRational::zero(), BigRational::zero()),
        |(u, w), row| (u + row.unweighted.value(), w + row.weighted.value()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Article;
    use crate::decimal::parse_decimal;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// One single-author and one three-author article, equal citations.
    fn distortion() -> Corpus {
        Corpus::validate([
            Article::new("solo", "X", ["s"], 10).unwrap(),
            Article::new("team", "Y", ["t1", "t2", "t3"], 10).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn ap_examples() {
        let u = distortion();
        assert_eq!(ap(&u, &u).unwrap().value(), &r(1, 1));
        let x = u.subset_by_subfield("X").unwrap();
        assert_eq!(ap(&x, &u).unwrap().value(), &r(1, 2));
        assert!(ap(&Corpus::empty(), &u).unwrap().is_zero());
        assert_eq!(
            ap(&u, &Corpus::empty()).unwrap_err(),
            IndicatorError::NotASubset("solo".into())
        );
        assert_eq!(
            ap(&Corpus::empty(), &Corpus::empty()).unwrap_err(),
            IndicatorError::EmptyUniverse(Universe::Publication)
        );
    }

    #[test]
    fn weighted_examples() {
        let u = distortion();
        let x = u.subset_by_subfield("X").unwrap();
        let y = u.subset_by_subfield("Y").unwrap();
        let total = CountingMethod::Total;
        assert_eq!(wap(&x, &u, &total).unwrap().value(), &r(1, 4));
        assert_eq!(wap(&y, &u, &total).unwrap().value(), &r(3, 4));
        assert_eq!(wcp(&x, &u, &total).unwrap().value(), &r(1, 4));
        assert_eq!(wcp(&y, &u, &total).unwrap().value(), &r(3, 4));
        assert_eq!(cp(&x, &u).unwrap().value(), &r(1, 2));
        for m in [CountingMethod::Fractional, CountingMethod::First] {
            assert_eq!(wap(&x, &u, &m).unwrap(), ap(&x, &u).unwrap());
            assert_eq!(wcp(&y, &u, &m).unwrap(), cp(&y, &u).unwrap());
        }
        assert_eq!(wap(&u, &u, &total).unwrap().value(), &r(1, 1));
    }

    #[test]
    fn cp_with_uncited_subset() {
        let u = Corpus::validate([
            Article::new("a", "X", ["x"], 0).unwrap(),
            Article::new("b", "Y", ["y"], 5).unwrap(),
        ])
        .unwrap();
        let x = u.subset_by_subfield("X").unwrap();
        assert!(cp(&x, &u).unwrap().is_zero());
        let r = report(&u, Mode::Citation, &CountingMethod::Total).unwrap();
        assert_eq!(r.rows[0].ratio, None);
    }

    #[test]
    fn report_on_distortion_fixture() {
        let rep = report(&distortion(), Mode::Publication, &CountingMethod::Total).unwrap();
        let rows: Vec<_> = rep
            .rows
            .iter()
            .map(|row| {
                (
                    row.label.as_str(),
                    row.unweighted.value().clone(),
                    row.weighted.value().clone(),
                    row.ratio.clone().unwrap(),
                )
            })
            .collect();
        assert_eq!(
            rows,
            vec![
                ("X", r(1, 2), r(1, 4), r(1, 2)),
                ("Y", r(1, 2), r(3, 4), r(3, 2)),
            ]
        );
        let (su, sw) = column_sums(&rep);
        assert_eq!((su, sw), (r(1, 1), r(1, 1)));
    }

    #[test]
    fn single_subfield_report() {
        let u = Corpus::validate([Article::new("a", "Z", ["x", "y"], 3).unwrap()]).unwrap();
        let rep = report(&u, Mode::Citation, &CountingMethod::Total).unwrap();
        assert_eq!(rep.rows.len(), 1);
        assert_eq!(rep.rows[0].ratio, Some(r(1, 1)));
    }

    #[test]
    fn zero_citation_report_is_empty_universe() {
        let u = Corpus::validate([Article::new("a", "Z", ["x"], 0).unwrap()]).unwrap();
        let err = report(&u, Mode::Citation, &CountingMethod::Total).unwrap_err();
        assert_eq!(err.to_string(), "empty citation universe");
    }

    #[test]
    fn group_indicators() {
        let u = Corpus::validate([
            Article::new("a1", "A", ["x", "y"], 2).unwrap(),
            Article::new("a2", "A", ["z"], 4).unwrap(),
        ])
        .unwrap();
        let g = AuthorGroup::from_ids("g", ["x"]).unwrap();
        let a = u.subset_by_group(&g);
        let total = CountingMethod::Total;
        assert_eq!(gwap(&a, &u, &g, &total).unwrap().value(), &r(1, 3));
        assert_eq!(gwcp(&a, &u, &g, &total).unwrap().value(), &r(1, 4));

        let all = AuthorGroup::from_ids("all", ["x", "y", "z"]).unwrap();
        let a = u.subset_by_group(&all);
        assert_eq!(gwap(&a, &u, &all, &total).unwrap().value(), &r(1, 1));
        assert_eq!(gwcp(&a, &u, &all, &total).unwrap().value(), &r(1, 1));

        let none = AuthorGroup::from_ids("none", ["q"]).unwrap();
        let a = u.subset_by_group(&none);
        assert!(a.is_empty());
        assert!(gwap(&a, &u, &none, &total).unwrap().is_zero());

        assert_eq!(
            gwap(&u, &u, &g, &total).unwrap_err(),
            IndicatorError::GroupMismatch("a2".into(), "g".into())
        );

        let uncited = Corpus::validate([Article::new("a", "A", ["x"], 0).unwrap()]).unwrap();
        let a = uncited.subset_by_group(&g);
        assert_eq!(
            gwcp(&a, &uncited, &g, &total).unwrap_err(),
            IndicatorError::EmptyUniverse(Universe::WeightedCitation)
        );
    }

    #[test]
    fn nrc_worked_examples() {
        let u = Corpus::validate([Article::new("p", "A", ["x", "y"], 2).unwrap()]).unwrap();
        let same = AuthorGroup::from_ids("dept", ["x", "y"]).unwrap();
        let s = nrc_department_stats(&u, &same);
        assert_eq!(
            (s.allocated_publications, s.allocated_citations, s.cites_per_publication),
            (2, 4, Some(r(2, 1)))
        );
        for member in ["x", "y"] {
            let dept = AuthorGroup::from_ids("d", [member]).unwrap();
            let s = nrc_department_stats(&u, &dept);
            assert_eq!(
                (s.allocated_publications, s.allocated_citations, s.cites_per_publication),
                (1, 2, Some(r(2, 1)))
            );
        }
        let empty = AuthorGroup::from_ids("e", ["nobody"]).unwrap();
        let s = nrc_department_stats(&u, &empty);
        assert_eq!((s.allocated_publications, s.allocated_citations), (0, 0));
        assert_eq!(s.cites_per_publication, None);
        assert_eq!(s.publications_per_faculty(0, 7), None);
        let s = nrc_department_stats(&u, &same);
        assert_eq!(s.publications_per_faculty(4, 2), Some(r(1, 4)));
    }

    fn row(label: &str, u: &str, w: &str, ratio: &str) -> FixtureRow {
        FixtureRow {
            label: label.into(),
            unweighted: parse_decimal(u).unwrap(),
            weighted: parse_decimal(w).unwrap(),
            ratio: parse_decimal(ratio).unwrap(),
        }
    }

    #[test]
    fn forced_fixture_failure() {
        let rows = [row("Q", "0.5", "0.5", "9.99")];
        let res = check_fixture_table(&rows, &r(5, 1000), &r(3, 1000)).unwrap();
        assert!(!res.passed());
        let ratio = &res.checks[0];
        assert!(!ratio.passed);
        assert_eq!(ratio.residual, r(899, 100));
        assert!(res.render_text(3).contains("ratio[Q]"));
        assert!(res.render_text(3).contains("FAIL"));
    }

    #[test]
    fn malformed_fixtures() {
        let tol = r(1, 100);
        assert!(matches!(
            check_fixture_table(&[], &tol, &tol),
            Err(IndicatorError::MalformedFixture(_))
        ));
        assert!(matches!(
            check_fixture_table(&[row("A", "1.2", "0.5", "1")], &tol, &tol),
            Err(IndicatorError::MalformedFixture(_))
        ));
        assert!(matches!(
            check_fixture_table(&[row("A", "0", "0.5", "1")], &tol, &tol),
            Err(IndicatorError::MalformedFixture(_))
        ));
        assert!(matches!(
            check_fixture_table(&[row("A", "0.5", "0.5", "1"), row("A", "0.5", "0.5", "1")], &tol, &tol),
            Err(IndicatorError::MalformedFixture(_))
        ));
    }
}
