//! Sequence lookups against the OEIS.
//!
//! Offline lookups match against JSON snapshots under `fixtures/oeis/`
//! (bundled into the library at build time, or read from a directory). With
//! the `online` feature, [`OeisClient`] also queries the public search
//! endpoint and falls back to the fixtures when the network is unavailable.
//!
//! Three match kinds are recognised: the query is a prefix of the entry
//! ([`MatchKind::ExactPrefix`]), the two agree after cropping at most
//! [`MAX_CROP`] leading terms from either side ([`MatchKind::Shifted`]), or
//! the first differences of the query match ([`MatchKind::FirstDifference`]).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

use crate::counting::{count_series, first_difference, partial_sum};
use crate::error::{Error, Result};
use crate::langspec::presets::preset;

/// Queries shorter than this are rejected.
pub const MIN_TERMS: usize = 6;
/// Largest number of leading terms cropped from either side.
pub const MAX_CROP: usize = 3;

const BUNDLED: &[(&str, &str)] = &[
    ("A000069", include_str!("../fixtures/oeis/A000069.json")),
    ("A001969", include_str!("../fixtures/oeis/A001969.json")),
    ("A028859", include_str!("../fixtures/oeis/A028859.json")),
    ("A072256", include_str!("../fixtures/oeis/A072256.json")),
    ("A086347", include_str!("../fixtures/oeis/A086347.json")),
    ("A119826", include_str!("../fixtures/oeis/A119826.json")),
    ("A125145", include_str!("../fixtures/oeis/A125145.json")),
    ("A138288", include_str!("../fixtures/oeis/A138288.json")),
    ("A155020", include_str!("../fixtures/oeis/A155020.json")),
    ("A180033", include_str!("../fixtures/oeis/A180033.json")),
    ("A180167", include_str!("../fixtures/oeis/A180167.json")),
    ("A282310", include_str!("../fixtures/oeis/A282310.json")),
    ("A322054", include_str!("../fixtures/oeis/A322054.json")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisEntry {
    pub number: String,
    pub name: String,
    pub offset: i64,
    #[serde(serialize_with = "crate::manifest::ser_bigints")]
    pub terms: Vec<BigInt>,
    /// `"snapshot"` for downloaded data, `"reconstructed"` for fixtures
    /// rebuilt from the entry's definition.
    pub source: String,
}

#[derive(Deserialize)]
struct FixtureFile {
    number: String,
    name: String,
    offset: i64,
    data: Vec<String>,
    #[serde(default = "snapshot")]
    source: String,
}

fn snapshot() -> String {
    "snapshot".to_string()
}

impl OeisEntry {
    pub fn from_json(text: &str, origin: &str) -> Result<Self> {
        let f: FixtureFile =
            serde_json::from_str(text).map_err(|e| Error::Fixture(format!("{origin}: {e}")))?;
        if !valid_a_number(&f.number) {
            return Err(Error::Fixture(format!("{origin}: bad A-number {:?}", f.number)));
        }
        let terms = f
            .data
            .iter()
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Fixture(format!("{origin}: bad term: {e}")))?;
        Ok(OeisEntry { number: f.number, name: f.name, offset: f.offset, terms, source: f.source })
    }

    pub fn to_json(&self) -> String {
        let doc = serde_json::json!({
            "number": self.number,
            "name": self.name,
            "offset": self.offset,
            "data": self.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "source": self.source,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json value");
        s.push('\n');
        s
    }
}

fn valid_a_number(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|c| c.is_ascii_digit())
}

/// A set of entries keyed by A-number.
#[derive(Clone, Debug, Default)]
pub struct FixtureStore {
    entries: BTreeMap<String, OeisEntry>,
}

impl FixtureStore {
    /// The fixtures compiled into the library.
    pub fn bundled() -> Result<Self> {
        let mut store = FixtureStore::default();
        for (name, text) in BUNDLED {
            let e = OeisEntry::from_json(text, name)?;
            if e.number != *name {
                return Err(Error::Fixture(format!("{name}.json holds {}", e.number)));
            }
            store.insert(e);
        }
        Ok(store)
    }

    /// Every `A??????.json` file in `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut store = FixtureStore::default();
        let mut paths: Vec<_> = std::fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.extension().is_some_and(|x| x == "json")
                    && p.file_stem().and_then(|s| s.to_str()).is_some_and(valid_a_number)
            })
            .collect();
        paths.sort();
        for p in paths {
            let origin = p.display().to_string();
            let e = OeisEntry::from_json(&std::fs::read_to_string(&p)?, &origin)?;
            let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
            if e.number != stem {
                return Err(Error::Fixture(format!("{origin} holds {}", e.number)));
            }
            store.insert(e);
        }
        Ok(store)
    }

    pub fn insert(&mut self, e: OeisEntry) {
        self.entries.insert(e.number.clone(), e);
    }

    pub fn get(&self, number: &str) -> Option<&OeisEntry> {
        self.entries.get(number)
    }

    pub fn entries(&self) -> impl Iterator<Item = &OeisEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchKind {
    ExactPrefix,
    Shifted,
    FirstDifference,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisMatch {
    pub a_number: String,
    pub name: String,
    pub offset: i64,
    pub kind: MatchKind,
    /// Leading terms dropped from the (possibly differenced) query.
    pub query_start: usize,
    /// Leading terms dropped from the entry.
    pub entry_start: usize,
    #[serde(serialize_with = "crate::manifest::ser_bigints")]
    pub window: Vec<BigInt>,
}

/// Smallest crops `(i, j)` such that `seq[i..]` and `entry[j..]` agree on
/// their common length, which must be at least [`MIN_TERMS`].
fn align(seq: &[BigInt], entry: &[BigInt]) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..=MAX_CROP.min(seq.len()) {
        for j in 0..=MAX_CROP.min(entry.len()) {
            let n = (seq.len() - i).min(entry.len() - j);
            if n < MIN_TERMS || seq[i..i + n] != entry[j..j + n] {
                continue;
            }
            if best.is_none_or(|(bi, bj, _)| (i + j, i) < (bi + bj, bi)) {
                best = Some((i, j, n));
            }
        }
    }
    best
}

/// Best match of `terms` against one entry, preferring direct matches.
pub fn match_entry(terms: &[BigInt], entry: &OeisEntry) -> Option<OeisMatch> {
    let mk = |kind, seq: &[BigInt], (i, j, n): (usize, usize, usize)| OeisMatch {
        a_number: entry.number.clone(),
        name: entry.name.clone(),
        offset: entry.offset,
        kind,
        query_start: i,
        entry_start: j,
        window: seq[i..i + n].to_vec(),
    };
    if let Some(a) = align(terms, &entry.terms) {
        let kind = if a.0 == 0 && a.1 == 0 { MatchKind::ExactPrefix } else { MatchKind::Shifted };
        return Some(mk(kind, terms, a));
    }
    let d = first_difference(terms);
    align(&d, &entry.terms).map(|a| mk(MatchKind::FirstDifference, &d, a))
}

fn check_query(terms: &[BigInt]) -> Result<()> {
    if terms.len() < MIN_TERMS {
        return Err(Error::InvalidInput(format!(
            "lookup needs at least {MIN_TERMS} terms, got {}",
            terms.len()
        )));
    }
    Ok(())
}

fn rank(mut matches: Vec<OeisMatch>, limit: usize) -> Vec<OeisMatch> {
    matches.sort_by(|a, b| {
        (a.kind, a.query_start + a.entry_start, &a.a_number).cmp(&(b.kind, b.query_start + b.entry_start, &b.a_number))
    });
    matches.dedup_by(|a, b| a.a_number == b.a_number);
    matches.truncate(limit);
    matches
}

/// Matches against the fixtures only.
pub fn lookup_offline(store: &FixtureStore, terms: &[BigInt], limit: usize) -> Result<Vec<OeisMatch>> {
    check_query(terms)?;
    Ok(rank(store.entries().filter_map(|e| match_entry(terms, e)).collect(), limit))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LookupSource {
    Fixtures,
    Online,
}

#[derive(Clone, Debug, Serialize)]
pub struct LookupOutcome {
    pub matches: Vec<OeisMatch>,
    pub source: LookupSource,
    /// Set when an online lookup failed and the fixtures answered instead.
    pub degraded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Single-owner lookup facade. Online requests go out one at a time with at
/// least [`OeisClient::MIN_DELAY`] between them; responses are cached.
pub struct OeisClient {
    store: FixtureStore,
    online: bool,
    #[cfg_attr(not(feature = "online"), allow(dead_code))]
    last_request: Option<std::time::Instant>,
    #[cfg_attr(not(feature = "online"), allow(dead_code))]
    cache: BTreeMap<String, Vec<OeisEntry>>,
}

impl OeisClient {
    pub const MIN_DELAY: std::time::Duration = std::time::Duration::from_millis(1500);
    pub const ENDPOINT: &'static str = "https://oeis.org/search";

    pub fn offline(store: FixtureStore) -> Self {
        OeisClient { store, online: false, last_request: None, cache: BTreeMap::new() }
    }

    /// Online client. Without the `online` feature every request fails and
    /// lookups run in degraded mode.
    pub fn online(store: FixtureStore) -> Self {
        OeisClient { store, online: true, last_request: None, cache: BTreeMap::new() }
    }

    pub fn store(&self) -> &FixtureStore {
        &self.store
    }

    pub fn lookup(&mut self, terms: &[BigInt], limit: usize) -> Result<LookupOutcome> {
        check_query(terms)?;
        if self.online {
            match self.lookup_online(terms, limit) {
                Ok(matches) => {
                    return Ok(LookupOutcome { matches, source: LookupSource::Online, degraded: false, error: None })
                }
                Err(e) => {
                    let matches = lookup_offline(&self.store, terms, limit)?;
                    return Ok(LookupOutcome {
                        matches,
                        source: LookupSource::Fixtures,
                        degraded: true,
                        error: Some(e.to_string()),
                    });
                }
            }
        }
        Ok(LookupOutcome {
            matches: lookup_offline(&self.store, terms, limit)?,
            source: LookupSource::Fixtures,
            degraded: false,
            error: None,
        })
    }

    fn lookup_online(&mut self, terms: &[BigInt], limit: usize) -> Result<Vec<OeisMatch>> {
        let mut candidates = self.search(&join(terms))?;
        candidates.extend(self.search(&join(&first_difference(terms)))?);
        Ok(rank(candidates.iter().filter_map(|e| match_entry(terms, e)).collect(), limit))
    }

    /// Downloads one entry by A-number.
    pub fn fetch(&mut self, number: &str) -> Result<OeisEntry> {
        if !valid_a_number(number) {
            return Err(Error::InvalidInput(format!("bad A-number {number:?}")));
        }
        self.search(&format!("id:{number}"))?
            .into_iter()
            .find(|e| e.number == number)
            .ok_or_else(|| Error::Network(format!("{number} not found")))
    }

    #[cfg(feature = "online")]
    fn search(&mut self, query: &str) -> Result<Vec<OeisEntry>> {
        if let Some(hit) = self.cache.get(query) {
            return Ok(hit.clone());
        }
        if let Some(t) = self.last_request {
            let since = t.elapsed();
            if since < Self::MIN_DELAY {
                std::thread::sleep(Self::MIN_DELAY - since);
            }
        }
        self.last_request = Some(std::time::Instant::now());
        let mut resp = ureq::get(Self::ENDPOINT)
            .query("q", query)
            .query("fmt", "json")
            .call()
            .map_err(|e| Error::Network(e.to_string()))?;
        let body = resp.body_mut().read_to_string().map_err(|e| Error::Network(e.to_string()))?;
        let entries = parse_search_response(&body)?;
        self.cache.insert(query.to_string(), entries.clone());
        Ok(entries)
    }

    #[cfg(not(feature = "online"))]
    fn search(&mut self, _query: &str) -> Result<Vec<OeisEntry>> {
        Err(Error::Network("built without the `online` feature".into()))
    }
}

fn join(terms: &[BigInt]) -> String {
    terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses a JSON search response. Both the bare-array format and the older
/// `{"results": [...]}` wrapper are accepted.
pub fn parse_search_response(body: &str) -> Result<Vec<OeisEntry>> {
    let v: serde_json::Value =
        serde_json::from_str(body).map_err(|e| Error::Network(format!("bad response: {e}")))?;
    let items = match &v {
        serde_json::Value::Array(a) => a.clone(),
        serde_json::Value::Object(o) => match o.get("results") {
            Some(serde_json::Value::Array(a)) => a.clone(),
            _ => Vec::new(),
        },
        _ => Vec::new(),
    };
    let mut out = Vec::new();
    for it in items {
        let Some(num) = it.get("number").and_then(|n| n.as_u64()) else { continue };
        let data = it.get("data").and_then(|d| d.as_str()).unwrap_or_default();
        let terms = data
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Network(format!("bad term in A{num:06}: {e}")))?;
        let offset = it
            .get("offset")
            .and_then(|o| o.as_str())
            .and_then(|o| o.split(',').next())
            .and_then(|o| o.trim().parse().ok())
            .unwrap_or(0);
        out.push(OeisEntry {
            number: format!("A{num:06}"),
            name: it.get("name").and_then(|n| n.as_str()).unwrap_or_default().to_string(),
            offset,
            terms,
            source: "snapshot".into(),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogStatus {
    Ok,
    Missing,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub label: String,
    pub a_number: String,
    pub status: CatalogStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched: Option<OeisMatch>,
    /// Provenance of the fixture (`snapshot` or `reconstructed`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub rows: Vec<CatalogRow>,
    pub missing: Vec<String>,
    pub all_ok: bool,
}

/// `(k, b)` rows of the y-sequence table with their A-numbers.
pub const Y_TABLE: &[(u32, u32, &[&str])] = &[
    (2, 3, &["A028859", "A155020"]),
    (2, 4, &["A125145"]),
    (2, 5, &["A086347"]),
    (2, 6, &["A180033"]),
    (2, 7, &["A180167"]),
    (2, 10, &["A322054"]),
    (3, 3, &["A119826"]),
    (3, 4, &["A282310"]),
];

const CATALOG_TERMS: usize = 20;

fn counts(name: &str, n: usize) -> Result<Vec<BigInt>> {
    Ok(count_series(&preset(name)?, n)?.as_bigints())
}

fn members(name: &str, n: usize) -> Result<Vec<BigInt>> {
    let spec = preset(name)?;
    Ok((0u64..).filter(|&m| spec.contains(m)).take(n).map(BigInt::from).collect())
}

/// Computed sequences paired with the entries they should match.
pub fn catalog_queries() -> Result<Vec<(String, Vec<BigInt>, &'static str)>> {
    let mut q = Vec::new();
    for &(k, b, numbers) in Y_TABLE {
        let y = counts(&format!("y:{b}:{k}"), CATALOG_TERMS)?;
        for &a in numbers {
            q.push((format!("y-sequence k={k} b={b}"), y.clone(), a));
        }
    }
    let l1 = counts("L1", CATALOG_TERMS)?;
    q.push(("L1 counts".into(), l1.clone(), "A072256"));
    q.push(("L1 counts".into(), l1, "A138288"));
    q.push(("L2 count partial sums".into(), partial_sum(&counts("L2", CATALOG_TERMS)?), "A322054"));
    q.push(("odious numbers".into(), members("thue_morse", 40)?, "A000069"));
    q.push(("evil numbers".into(), members("evil", 40)?, "A001969"));
    Ok(q)
}

/// Checks every catalogued sequence against its fixture. Missing fixtures
/// are listed and make the report fail.
pub fn crosscheck_catalog(store: &FixtureStore) -> Result<CatalogReport> {
    let mut rows = Vec::new();
    let mut missing = Vec::new();
    for (label, terms, a) in catalog_queries()? {
        let row = match store.get(a) {
            None => {
                if !missing.iter().any(|m| m == a) {
                    missing.push(a.to_string());
                }
                CatalogRow { label, a_number: a.into(), status: CatalogStatus::Missing, matched: None, source: None }
            }
            Some(e) => {
                let m = match_entry(&terms, e).filter(|m| m.kind != MatchKind::FirstDifference);
                CatalogRow {
                    label,
                    a_number: a.into(),
                    status: if m.is_some() { CatalogStatus::Ok } else { CatalogStatus::Mismatch },
                    matched: m,
                    source: Some(e.source.clone()),
                }
            }
        };
        rows.push(row);
    }
    let all_ok = rows.iter().all(|r| r.status == CatalogStatus::Ok);
    Ok(CatalogReport { rows, missing, all_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bundled_fixtures_parse() {
        let s = FixtureStore::bundled().unwrap();
        assert_eq!(s.len(), BUNDLED.len());
        assert!(s.entries().all(|e| e.terms.len() >= 20));
    }

    #[test]
    fn bundled_matches_directory() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis");
        let a = FixtureStore::bundled().unwrap();
        let b = FixtureStore::from_dir(&dir).unwrap();
        assert_eq!(a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>());
    }

    #[test]
    fn too_short_query() {
        let s = FixtureStore::bundled().unwrap();
        assert!(matches!(lookup_offline(&s, &big(&[1, 9, 89]), 5), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn l1_counts_hit_both_entries() {
        let s = FixtureStore::bundled().unwrap();
        let m = lookup_offline(&s, &counts("L1", 12).unwrap(), 10).unwrap();
        let kinds: BTreeMap<_, _> = m.iter().map(|m| (m.a_number.as_str(), (m.kind, m.entry_start))).collect();
        assert_eq!(kinds["A138288"], (MatchKind::ExactPrefix, 0));
        assert_eq!(kinds["A072256"], (MatchKind::Shifted, 1));
    }

    #[test]
    fn l2_partial_sums_hit_a322054() {
        let s = FixtureStore::bundled().unwrap();
        let raw = counts("L2", 12).unwrap();
        assert!(lookup_offline(&s, &raw, 10).unwrap().iter().all(|m| m.a_number != "A322054"
            || m.kind == MatchKind::FirstDifference));
        let m = lookup_offline(&s, &partial_sum(&raw), 10).unwrap();
        assert!(m.iter().any(|m| m.a_number == "A322054"));
    }

    #[test]
    fn first_difference_is_sound() {
        let s = FixtureStore::bundled().unwrap();
        // Partial sums of the y-sequence difference back to it.
        let y = counts("y:5:2", 15).unwrap();
        let mut q = vec![BigInt::from(7)];
        q.extend(partial_sum(&y).into_iter().map(|t| t + 7));
        let m = lookup_offline(&s, &q, 10).unwrap();
        let hit = m.iter().find(|m| m.a_number == "A086347").unwrap();
        assert_eq!(hit.kind, MatchKind::FirstDifference);
        let d = first_difference(&q);
        let n = hit.window.len();
        assert_eq!(&d[hit.query_start..hit.query_start + n], hit.window.as_slice());
        let e = s.get("A086347").unwrap();
        assert_eq!(&e.terms[hit.entry_start..hit.entry_start + n], hit.window.as_slice());
    }

    #[test]
    fn y_table_examples() {
        let s = FixtureStore::bundled().unwrap();
        let m = lookup_offline(&s, &counts("y:3:2", 15).unwrap(), 10).unwrap();
        assert!(m.iter().any(|m| m.a_number == "A028859" && m.kind == MatchKind::ExactPrefix));
        let m = lookup_offline(&s, &counts("y:5:2", 15).unwrap(), 10).unwrap();
        assert!(m.iter().any(|m| m.a_number == "A086347"));
        let m = lookup_offline(&s, &members("evil", 30).unwrap(), 10).unwrap();
        assert_eq!(m[0].a_number, "A001969");
    }

    #[test]
    fn cropped_match() {
        let s = FixtureStore::bundled().unwrap();
        let y = counts("y:4:3", 15).unwrap();
        let m = lookup_offline(&s, &y[2..], 10).unwrap();
        let hit = m.iter().find(|m| m.a_number == "A282310").unwrap();
        assert_eq!((hit.kind, hit.entry_start), (MatchKind::Shifted, 2));
    }

    #[test]
    fn offline_output_is_deterministic() {
        let s = FixtureStore::bundled().unwrap();
        let q = counts("L1", 10).unwrap();
        let a = serde_json::to_string(&lookup_offline(&s, &q, 10).unwrap()).unwrap();
        let b = serde_json::to_string(&lookup_offline(&s, &q, 10).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn catalog_passes_on_bundled_fixtures() {
        let r = crosscheck_catalog(&FixtureStore::bundled().unwrap()).unwrap();
        assert!(r.all_ok, "{r:?}");
        assert!(r.missing.is_empty());
        assert_eq!(r.rows.len(), 9 + 5);
    }

    #[test]
    fn catalog_lists_missing_and_corrupt() {
        let mut s = FixtureStore::bundled().unwrap();
        s.entries.remove("A282310");
        let mut bad = s.get("A001969").unwrap().clone();
        bad.terms[5] += 1;
        s.insert(bad);
        let r = crosscheck_catalog(&s).unwrap();
        assert!(!r.all_ok);
        assert_eq!(r.missing, vec!["A282310".to_string()]);
        let st: BTreeMap<_, _> = r.rows.iter().map(|r| (r.a_number.as_str(), r.status)).collect();
        assert_eq!(st["A001969"], CatalogStatus::Mismatch);
        assert_eq!(st["A282310"], CatalogStatus::Missing);
    }

    #[test]
    fn offline_client_without_network() {
        let mut c = OeisClient::offline(FixtureStore::bundled().unwrap());
        let o = c.lookup(&counts("L1", 10).unwrap(), 3).unwrap();
        assert!(!o.degraded);
        assert_eq!(o.source, LookupSource::Fixtures);
    }

    #[cfg(not(feature = "online"))]
    #[test]
    fn online_client_degrades() {
        let mut c = OeisClient::online(FixtureStore::bundled().unwrap());
        let o = c.lookup(&counts("L1", 10).unwrap(), 3).unwrap();
        assert!(o.degraded);
        assert!(!o.matches.is_empty());
    }

    #[test]
    fn search_response_formats() {
        let body = r#"[{"number": 72256, "name": "x", "offset": "0,3", "data": "1,1,9,89"}]"#;
        let e = parse_search_response(body).unwrap();
        assert_eq!(e[0].number, "A072256");
        assert_eq!(e[0].terms, big(&[1, 1, 9, 89]));
        let wrapped = r#"{"results": [{"number": 1969, "data": "0,3,5"}]}"#;
        assert_eq!(parse_search_response(wrapped).unwrap()[0].number, "A001969");
        assert!(parse_search_response(r#"{"results": null}"#).unwrap().is_empty());
    }

    #[test]
    fn entry_json_round_trip() {
        let e = FixtureStore::bundled().unwrap().get("A072256").unwrap().clone();
        assert_eq!(OeisEntry::from_json(&e.to_json(), "rt").unwrap(), e);
    }
}
