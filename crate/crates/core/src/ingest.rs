//! Reading and writing corpus, group, weight-table and fixture files, plus a
//! seeded synthetic corpus generator.
//!
//! Articles are stored one JSON object per line:
//!
//! ```text
//! {"id":"a1","subfield":"A","authors":["x","y"],"citations":3}
//! {"id":"a2","subfield":"B","authors":["z"],"citations":["p1","p2"]}
//! ```
//!
//! `citations` is either a count or the list of citing record ids (only its
//! length is kept). Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::corpus::{Article, AuthorGroup, AuthorId, Corpus, CorpusError};
use crate::counting::{Weight, WeightTable};
use crate::decimal::parse_decimal;
use crate::indicators::FixtureRow;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: {source}")]
    InvalidRecord { line: usize, source: CorpusError },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("group {0:?} has no members")]
    EmptyGroup(String),
    #[error("group {0:?} is defined more than once")]
    DuplicateGroupName(String),
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_err(line: usize, reason: impl Into<String>) -> IngestError {
    IngestError::Parse {
        line,
        reason: reason.into(),
    }
}

/// The `citations` field as written in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CitationField {
    Count(i64),
    Citing(Vec<String>),
}

/// One parsed line of an articles file, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArticleRecord {
    /// 1-based line number in the source.
    pub line: usize,
    pub id: String,
    pub subfield: String,
    pub authors: Vec<String>,
    pub citations: CitationField,
}

impl ArticleRecord {
    /// Normalizes the record: trims ids and collapses citing ids to a count.
    pub fn into_article(self) -> Result<Article, CorpusError> {
        let id = self.id.trim().to_string();
        let citation_count = match self.citations {
            CitationField::Count(n) if n < 0 => return Err(CorpusError::NegativeCitations(id)),
            CitationField::Count(n) => n as u64,
            CitationField::Citing(ids) => ids.len() as u64,
        };
        Article::new(
            id,
            self.subfield.trim(),
            self.authors.iter().map(|a| a.trim().to_string()),
            citation_count,
        )
    }
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

fn string_field(line: usize, value: &Value, key: &str) -> Result<String, IngestError> {
    match value {
        Value::String(s) => Ok(s.clone()),
        _ => Err(parse_err(line, format!("field {key} must be a string"))),
    }
}

fn string_array(line: usize, value: &Value, key: &str) -> Result<Vec<String>, IngestError> {
    let Value::Array(items) = value else {
        return Err(parse_err(line, format!("field {key} must be an array of strings")));
    };
    items
        .iter()
        .map(|item| match item {
            Value::String(s) => Ok(s.clone()),
            _ => Err(parse_err(line, format!("field {key} must be an array of strings"))),
        })
        .collect()
}

fn parse_record(line_no: usize, text: &str) -> Result<ArticleRecord, IngestError> {
    let value: Value = serde_json::from_str(text).map_err(|e| parse_err(line_no, e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(parse_err(line_no, "record must be a JSON object"));
    };
    if let Some(key) = map
        .keys()
        .find(|k| !matches!(k.as_str(), "id" | "subfield" | "authors" | "citations"))
    {
        return Err(parse_err(line_no, format!("unknown field {key}")));
    }
    let get = |key: &str| {
        map.get(key)
            .ok_or_else(|| parse_err(line_no, format!("missing field {key}")))
    };
    let id = string_field(line_no, get("id")?, "id")?;
    let subfield = match get("subfield")? {
        Value::String(s) => s.clone(),
        Value::Array(_) => {
            return Err(parse_err(
                line_no,
                "field subfield must be a single label; multi-subfield articles are not supported",
            ))
        }
        _ => return Err(parse_err(line_no, "field subfield must be a string")),
    };
    let authors = string_array(line_no, get("authors")?, "authors")?;
    let citations = match get("citations")? {
        Value::Number(n) => match n.as_i64() {
            Some(n) => CitationField::Count(n),
            None => {
                return Err(parse_err(
                    line_no,
                    "field citations must be an integer count or an array of citing ids",
                ))
            }
        },
        v @ Value::Array(_) => CitationField::Citing(string_array(line_no, v, "citations")?),
        _ => {
            return Err(parse_err(
                line_no,
                "field citations must be an integer count or an array of citing ids",
            ))
        }
    };
    Ok(ArticleRecord {
        line: line_no,
        id,
        subfield,
        authors,
        citations,
    })
}

/// Parses every record of an articles file, keeping line numbers.
pub fn parse_articles<R: BufRead>(input: R) -> Result<Vec<ArticleRecord>, IngestError> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if is_skipped(&line) {
            continue;
        }
        records.push(parse_record(i + 1, &line)?);
    }
    Ok(records)
}

/// Parses, normalizes and validates an articles file.
pub fn read_corpus<R: BufRead>(input: R) -> Result<Corpus, IngestError> {
    let articles = parse_articles(input)?
        .into_iter()
        .map(|rec| {
            let line = rec.line;
            rec.into_article()
                .map_err(|source| IngestError::InvalidRecord { line, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Corpus::validate(articles)?)
}

#[derive(Serialize)]
struct OutRecord<'a> {
    id: &'a str,
    subfield: &'a str,
    authors: Vec<&'a str>,
    citations: u64,
}

/// Writes `corpus` in the articles format, one line per article in id order.
pub fn write_articles<W: Write>(corpus: &Corpus, mut out: W) -> io::Result<()> {
    for a in corpus.articles() {
        let rec = OutRecord {
            id: &a.id,
            subfield: &a.subfield,
            authors: a.authors.iter().map(AuthorId::as_str).collect(),
            citations: a.citation_count,
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Groups read from a groups file, with notes about repaired input.
#[derive(Debug, Clone)]
pub struct ParsedGroups {
    pub groups: Vec<AuthorGroup>,
    pub warnings: Vec<String>,
}

impl ParsedGroups {
    pub fn get(&self, name: &str) -> Option<&AuthorGroup> {
        self.groups.iter().find(|g| g.name() == name)
    }
}

/// Object entries in source order, duplicates kept.
struct GroupEntries(Vec<(String, Vec<String>)>);

impl<'de> Deserialize<'de> for GroupEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = GroupEntries;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an object mapping group names to arrays of author ids")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<GroupEntries, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<String>>()? {
                    entries.push((k, v));
                }
                Ok(GroupEntries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

/// Parses a groups file: a JSON object of `name -> [author ids]`.
///
/// Repeated members are dropped with a warning.
pub fn parse_groups<R: io::Read>(input: R) -> Result<ParsedGroups, IngestError> {
    let GroupEntries(entries) = serde_json::from_reader(input).map_err(|e| IngestError::Parse {
        line: e.line(),
        reason: e.to_string(),
    })?;
    let mut names = BTreeSet::new();
    let mut groups = Vec::with_capacity(entries.len());
    let mut warnings = Vec::new();
    for (name, ids) in entries {
        let name = name.trim().to_string();
        if !names.insert(name.clone()) {
            return Err(IngestError::DuplicateGroupName(name));
        }
        if ids.is_empty() {
            return Err(IngestError::EmptyGroup(name));
        }
        let mut members = BTreeSet::new();
        for id in &ids {
            let author = AuthorId::new(id.trim())?;
            if !members.insert(author.clone()) {
                warnings.push(format!("group {name:?}: duplicate member {author:?} ignored"));
            }
        }
        groups.push(AuthorGroup::new(name, members)?);
    }
    Ok(ParsedGroups { groups, warnings })
}

/// Parses a fixture table: `label unweighted weighted ratio` per line.
pub fn parse_fixture<R: BufRead>(input: R) -> Result<Vec<FixtureRow>, IngestError> {
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        if is_skipped(&line) {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [label, unweighted, weighted, ratio] = fields[..] else {
            return Err(parse_err(
                line_no,
                format!("expected 4 fields (label unweighted weighted ratio), found {}", fields.len()),
            ));
        };
        let number = |text: &str| {
            parse_decimal(text).ok_or_else(|| parse_err(line_no, format!("invalid decimal {text:?}")))
        };
        rows.push(FixtureRow {
            label: label.to_string(),
            unweighted: number(unweighted)?,
            weighted: number(weighted)?,
            ratio: number(ratio)?,
        });
    }
    Ok(rows)
}

/// Parses a custom weight table: the `n`-th data line lists the `n` position
/// weights of `n`-author articles as `p/q` rationals or decimals.
pub fn parse_weights<R: BufRead>(input: R) -> Result<WeightTable, IngestError> {
    let mut table = WeightTable::new();
    let mut count = 0;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        if is_skipped(&line) {
            continue;
        }
        count += 1;
        let weights = line
            .split_whitespace()
            .map(|entry| entry.parse::<Weight>().map_err(|reason| parse_err(line_no, reason)))
            .collect::<Result<Vec<_>, _>>()?;
        table
            .insert_for(count, weights)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
    }
    Ok(table)
}

/// A rational written as `"p/q"`, `"0.25"` or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalText(pub BigRational);

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match Value::deserialize(deserializer)? {
            Value::Number(n) if n.is_i64() || n.is_u64() => {
                let int = match n.as_i64() {
                    Some(i) => BigInt::from(i),
                    None => BigInt::from(n.as_u64().expect("checked above")),
                };
                Ok(RationalText(BigRational::from_integer(int)))
            }
            Value::String(s) => s
                .trim()
                .parse::<BigRational>()
                .ok()
                .or_else(|| parse_decimal(&s))
                .map(RationalText)
                .ok_or_else(|| de::Error::custom(format!("invalid rational {s:?}"))),
            other => Err(de::Error::custom(format!(
                "expected a rational string such as \"1/3\", found {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubfieldSpec {
    pub label: String,
    /// Probability that a generated article falls in this subfield.
    pub share: RationalText,
    /// `(author count, probability)` pairs.
    pub coauthors: Vec<(usize, RationalText)>,
    /// `(citation count, probability)` pairs.
    pub citations: Vec<(u64, RationalText)>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub article_count: usize,
    #[serde(default)]
    pub seed: u64,
    /// When set, authors are drawn without replacement from this many shared
    /// ids; otherwise every authorship gets a fresh id.
    #[serde(default)]
    pub shared_author_pool: Option<usize>,
    pub subfields: Vec<SubfieldSpec>,
}

impl GeneratorConfig {
    pub fn from_json<R: io::Read>(input: R) -> Result<Self, IngestError> {
        serde_json::from_reader(input).map_err(|e| IngestError::InvalidConfig(e.to_string()))
    }
}

/// Categorical distribution with exact rational probabilities, sampled by a
/// uniform integer draw over the common denominator.
#[derive(Debug, Clone)]
struct ExactCategorical<T> {
    outcomes: Vec<T>,
    upper: Vec<u64>,
    total: u64,
}

impl<T: Clone> ExactCategorical<T> {
    fn new(what: &str, table: &[(T, BigRational)]) -> Result<Self, IngestError> {
        let invalid = |reason: String| IngestError::InvalidConfig(format!("{what}: {reason}"));
        if table.is_empty() {
            return Err(invalid("empty distribution".into()));
        }
        let mut sum = BigRational::zero();
        let mut denom = BigInt::one();
        for (_, p) in table {
            if p.is_negative() {
                return Err(invalid(format!("negative probability {p}")));
            }
            sum += p;
            denom = denom.lcm(p.denom());
        }
        if !sum.is_one() {
            return Err(invalid(format!("probabilities sum to {sum}, not 1")));
        }
        let total = denom
            .to_u64()
            .ok_or_else(|| invalid("common denominator exceeds 64 bits".into()))?;
        let mut upper = Vec::with_capacity(table.len());
        let mut acc = 0u64;
        for (_, p) in table {
            acc += (p * BigRational::from_integer(denom.clone()))
                .to_integer()
                .to_u64()
                .expect("bounded by the common denominator");
            upper.push(acc);
        }
        Ok(ExactCategorical {
            outcomes: table.iter().map(|(o, _)| o.clone()).collect(),
            upper,
            total,
        })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> T {
        let draw = rng.random_range(0..self.total);
        let idx = self.upper.partition_point(|&u| u <= draw);
        self.outcomes[idx].clone()
    }
}

struct CompiledSubfield {
    label: String,
    coauthors: ExactCategorical<usize>,
    citations: ExactCategorical<u64>,
}

fn compile(config: &GeneratorConfig) -> Result<(ExactCategorical<usize>, Vec<CompiledSubfield>), IngestError> {
    let mut labels = BTreeSet::new();
    let mut subfields = Vec::with_capacity(config.subfields.len());
    for spec in &config.subfields {
        let label = spec.label.trim().to_string();
        if label.is_empty() {
            return Err(IngestError::InvalidConfig("empty subfield label".into()));
        }
        if !labels.insert(label.clone()) {
            return Err(IngestError::InvalidConfig(format!("subfield {label:?} listed twice")));
        }
        if let Some((n, _)) = spec.coauthors.iter().find(|(n, _)| *n == 0) {
            return Err(IngestError::InvalidConfig(format!(
                "subfield {label:?}: co-author count {n} must be at least 1"
            )));
        }
        if let Some(pool) = config.shared_author_pool {
            if let Some((n, _)) = spec.coauthors.iter().find(|(n, _)| *n > pool) {
                return Err(IngestError::InvalidConfig(format!(
                    "subfield {label:?}: {n} co-authors exceed the shared pool of {pool}"
                )));
            }
        }
        let coauthors: Vec<_> = spec.coauthors.iter().map(|(n, p)| (*n, p.0.clone())).collect();
        let citations: Vec<_> = spec.citations.iter().map(|(n, p)| (*n, p.0.clone())).collect();
        subfields.push(CompiledSubfield {
            coauthors: ExactCategorical::new(&format!("subfield {label:?} co-authors"), &coauthors)?,
            citations: ExactCategorical::new(&format!("subfield {label:?} citations"), &citations)?,
            label,
        });
    }
    let shares: Vec<_> = config
        .subfields
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.share.0.clone()))
        .collect();
    let picker = ExactCategorical::new("subfield shares", &shares)?;
    Ok((picker, subfields))
}

/// Draws a synthetic corpus. The output is a pure function of `config`.
pub fn generate_corpus(config: &GeneratorConfig) -> Result<Corpus, IngestError> {
    if config.article_count == 0 && config.subfields.is_empty() {
        return Ok(Corpus::empty());
    }
    let (picker, subfields) = compile(config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let width = config.article_count.to_string().len();
    let mut next_author = 0usize;
    let mut articles = Vec::with_capacity(config.article_count);
    for i in 0..config.article_count {
        let sub = &subfields[picker.sample(&mut rng)];
        let n = sub.coauthors.sample(&mut rng);
        let citations = sub.citations.sample(&mut rng);
        let authors: Vec<String> = match config.shared_author_pool {
            Some(pool) => index::sample(&mut rng, pool, n)
                .into_iter()
                .map(|k| format!("p{k}"))
                .collect(),
            None => (0..n)
                .map(|_| {
                    next_author += 1;
                    format!("u{next_author}")
                })
                .collect(),
        };
        articles.push(Article::new(
            format!("g{:0width$}", i + 1),
            sub.label.clone(),
            authors,
            citations,
        )?);
    }
    Ok(Corpus::validate(articles)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::credit;

    #[test]
    fn parses_count_and_citing_forms() {
        let input = concat!(
            "# header\n",
            "{\"id\":\"a1\",\"subfield\":\"A\",\"authors\":[\"x\",\"y\"],\"citations\":3}\n",
            "\n",
            "{\"id\":\"a2\",\"subfield\":\"B\",\"authors\":[\"z\"],\"citations\":[\"p1\",\"p2\"]}\n",
        );
        let recs = parse_articles(input.as_bytes()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].citations, CitationField::Count(3));
        assert_eq!(recs[1].line, 4);
        let a2 = recs[1].clone().into_article().unwrap();
        assert_eq!(a2.citation_count, 2);
    }

    #[test]
    fn missing_authors_reports_line() {
        let input = "\n{\"id\":\"a1\",\"subfield\":\"A\",\"citations\":3}\n";
        match parse_articles(input.as_bytes()).unwrap_err() {
            IngestError::Parse { line, reason } => {
                assert_eq!(line, 2);
                assert_eq!(reason, "missing field authors");
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        for bad in [
            r#"{"id":"a","subfield":["A","B"],"authors":["x"],"citations":1}"#,
            r#"{"id":"a","subfield":"A","authors":["x"],"citations":1.5}"#,
            r#"{"id":"a","subfield":"A","authors":"x","citations":1}"#,
            r#"{"id":"a","subfield":"A","authors":["x"],"citations":1,"year":2013}"#,
            r#"{"id":1,"subfield":"A","authors":["x"],"citations":1}"#,
            r#"["a"]"#,
            r#"{"id":"a""#,
        ] {
            assert!(
                matches!(parse_articles(bad.as_bytes()), Err(IngestError::Parse { line: 1, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn negative_citations() {
        let input = r#"{"id":"a","subfield":"A","authors":["x"],"citations":-1}"#;
        match read_corpus(input.as_bytes()).unwrap_err() {
            IngestError::InvalidRecord { line: 1, source } => {
                assert_eq!(source, CorpusError::NegativeCitations("a".into()))
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn ids_are_trimmed() {
        let input = r#"{"id":" a ","subfield":"A ","authors":[" x","y "],"citations":0}"#;
        let c = read_corpus(input.as_bytes()).unwrap();
        let a = c.get("a").unwrap();
        assert_eq!(a.subfield, "A");
        assert_eq!(a.authors[0].as_str(), "x");
    }

    #[test]
    fn groups() {
        let g = parse_groups(r#"{"deptA": ["x", "y"]}"#.as_bytes()).unwrap();
        assert_eq!(g.groups.len(), 1);
        assert_eq!(g.groups[0].members().len(), 2);
        assert!(g.warnings.is_empty());

        let g = parse_groups(r#"{"deptA": ["x", "x"]}"#.as_bytes()).unwrap();
        assert_eq!(g.get("deptA").unwrap().members().len(), 1);
        assert_eq!(g.warnings.len(), 1);

        assert!(matches!(
            parse_groups(r#"{"deptA": []}"#.as_bytes()),
            Err(IngestError::EmptyGroup(n)) if n == "deptA"
        ));
        assert!(matches!(
            parse_groups(r#"{"d": ["x"], "d": ["y"]}"#.as_bytes()),
            Err(IngestError::DuplicateGroupName(n)) if n == "d"
        ));
        assert!(matches!(
            parse_groups(r#"{"d": "x"}"#.as_bytes()),
            Err(IngestError::Parse { .. })
        ));
    }

    #[test]
    fn fixture_rows() {
        let rows = parse_fixture("# PR AP WAP Ratio\nA 0.195 0.054 0.277\n".as_bytes()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].ratio, parse_decimal("0.277").unwrap());
        assert!(matches!(
            parse_fixture("A 0.1 0.2\n".as_bytes()),
            Err(IngestError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_fixture("A 0.1 0.2 x\n".as_bytes()),
            Err(IngestError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn weight_tables() {
        let table = parse_weights("1\n2/3 1/3\n# comment\n1/2 1/4 1/4\n".as_bytes()).unwrap();
        assert_eq!(table.row(3).unwrap()[1], Weight::ratio(1, 4));
        assert!(matches!(
            parse_weights("1\n1/2\n".as_bytes()),
            Err(IngestError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_weights("-1\n".as_bytes()),
            Err(IngestError::Parse { line: 1, .. })
        ));
    }

    fn config(json: &str) -> GeneratorConfig {
        GeneratorConfig::from_json(json.as_bytes()).unwrap()
    }

    #[test]
    fn generator_empty() {
        let c = config(r#"{"article_count":0,"subfields":[]}"#);
        assert!(generate_corpus(&c).unwrap().is_empty());
    }

    #[test]
    fn generator_degenerate_coauthors() {
        let c = config(
            r#"{"article_count":5,"seed":3,"subfields":[
                {"label":"A","share":"1","coauthors":[[3,"1"]],"citations":[[0,"1/2"],[4,"1/2"]]}
            ]}"#,
        );
        let corpus = generate_corpus(&c).unwrap();
        assert_eq!(corpus.len(), 5);
        assert!(corpus.articles().all(|a| a.author_count() == 3));
        assert_eq!(credit::size_cw_publication(&corpus), 15);
    }

    #[test]
    fn generator_rejects_bad_configs() {
        for bad in [
            r#"{"article_count":1,"subfields":[{"label":"A","share":"1/2","coauthors":[[1,"1"]],"citations":[[0,"1"]]}]}"#,
            r#"{"article_count":1,"subfields":[{"label":"A","share":"1","coauthors":[[1,"1/3"]],"citations":[[0,"1"]]}]}"#,
            r#"{"article_count":1,"subfields":[{"label":"A","share":"1","coauthors":[[0,"1"]],"citations":[[0,"1"]]}]}"#,
            r#"{"article_count":1,"shared_author_pool":2,"subfields":[{"label":"A","share":"1","coauthors":[[3,"1"]],"citations":[[0,"1"]]}]}"#,
            r#"{"article_count":1,"subfields":[]}"#,
        ] {
            assert!(
                matches!(generate_corpus(&config(bad)), Err(IngestError::InvalidConfig(_))),
                "{bad}"
            );
        }
        assert!(GeneratorConfig::from_json(r#"{"article_count":-1,"subfields":[]}"#.as_bytes()).is_err());
    }

    #[test]
    fn generator_shared_pool() {
        let c = config(
            r#"{"article_count":40,"seed":9,"shared_author_pool":5,"subfields":[
                {"label":"A","share":"1/3","coauthors":[[1,"1/2"],[5,"1/2"]],"citations":[[1,"1"]]},
                {"label":"B","share":"2/3","coauthors":[[2,"1"]],"citations":[[0,"0.5"],[3,"0.5"]]}
            ]}"#,
        );
        let corpus = generate_corpus(&c).unwrap();
        assert_eq!(corpus.len(), 40);
        let authors: BTreeSet<_> = corpus.articles().flat_map(|a| a.authors.iter()).collect();
        assert!(authors.len() <= 5);
        assert_eq!(generate_corpus(&c).unwrap(), corpus);
    }
}
