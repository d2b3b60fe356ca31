//! Quasi-affine parameter sweeps and OEIS lookups.
//!
//! A sweep enumerates 8-tuples (x,y,u,v,a,b,c,d) over small value sets,
//! filters out tuples that reduce to S- or J-fractions, and expands each
//! T-fraction to an integer sequence. Lookups hit, in order: the on-disk
//! cache, the built-in fixtures, and finally the live OEIS search endpoint
//! (never in offline mode, and rate-limited to one request per second).

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cfrac::{expand_t, quasi_affine, series_ints, QuasiAffineSpec};

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "TFRAC_OEIS_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("empty query sequence")]
    InvalidQuery,
    #[error("network unavailable for query {0} (offline and no cache/fixture hit)")]
    NetworkUnavailable(String),
    #[error("malformed response: {0}")]
    MalformedResponse(String),
    #[error("http error: {0}")]
    Http(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Which parameter tuples a sweep visits and how the sequences are produced.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Value set per parameter, in the order x, y, u, v, a, b, c, d.
    pub values: [Vec<i64>; 8],
    /// Drop tuples with a = b = c = d = 0 (plain S-fractions).
    pub exclude_all_delta_zero: bool,
    /// Drop tuples with c = d = 0 (linear transforms of S-fractions).
    pub exclude_cd_zero: bool,
    /// Drop tuples with a = c = 0 (odd contraction gives a J-fraction).
    pub exclude_ac_zero: bool,
    /// Drop tuples with b = d = 0 (even contraction gives a J-fraction).
    pub exclude_bd_zero: bool,
    /// Number of sequence terms generated (including a_0 = 1).
    pub n_terms: usize,
    /// Leading terms dropped before lookup.
    pub drop_first: usize,
}

impl SweepConfig {
    /// The 0/1 sweep: x = y = 1, the rest over {0,1}, excluding pure
    /// S-fractions and c = d = 0; 48 tuples survive.
    pub fn first_sweep() -> Self {
        let zo = || vec![0i64, 1];
        SweepConfig {
            values: [vec![1], vec![1], zo(), zo(), zo(), zo(), zo(), zo()],
            exclude_all_delta_zero: true,
            exclude_cd_zero: true,
            exclude_ac_zero: false,
            exclude_bd_zero: false,
            n_terms: 10,
            drop_first: 1,
        }
    }

    /// The 0/1/2 sweep: x, y over {1,2}, the rest over {0,1,2}, excluding
    /// a = c = 0 and b = d = 0; 2304 tuples survive.
    pub fn second_sweep() -> Self {
        let zot = || vec![0i64, 1, 2];
        SweepConfig {
            values: [
                vec![1, 2],
                vec![1, 2],
                zot(),
                zot(),
                zot(),
                zot(),
                zot(),
                zot(),
            ],
            exclude_all_delta_zero: false,
            exclude_cd_zero: false,
            exclude_ac_zero: true,
            exclude_bd_zero: true,
            n_terms: 10,
            drop_first: 1,
        }
    }

    fn keep(&self, p: &[i64; 8]) -> bool {
        let [_, _, _, _, a, b, c, d] = *p;
        if self.exclude_all_delta_zero && a == 0 && b == 0 && c == 0 && d == 0 {
            return false;
        }
        if self.exclude_cd_zero && c == 0 && d == 0 {
            return false;
        }
        if self.exclude_ac_zero && a == 0 && c == 0 {
            return false;
        }
        if self.exclude_bd_zero && b == 0 && d == 0 {
            return false;
        }
        true
    }
}

/// Expand every surviving tuple; deterministic odometer order.
pub fn sweep(config: &SweepConfig) -> Vec<([i64; 8], Vec<BigInt>)> {
    let mut out = Vec::new();
    let mut idx = [0usize; 8];
    loop {
        let params: [i64; 8] = std::array::from_fn(|i| config.values[i][idx[i]]);
        if config.keep(&params) {
            let spec = quasi_affine(&QuasiAffineSpec::from_ints(params));
            let series = expand_t(&spec, config.n_terms - 1);
            let seq = series_ints(&series).expect("integer parameters give integer series");
            out.push((params, seq));
        }
        // odometer increment, last coordinate fastest
        let mut pos = 8;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < config.values[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Zero-padded canonical A-number form.
pub fn to_a_form(num: u64) -> String {
    format!("A{num:06}")
}

/// The query URL for a term list, exactly as the search endpoint expects.
pub fn query_url(terms: &[BigInt]) -> String {
    let joined: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    format!("http://oeis.org/search?q={}&fmt=json", joined.join(","))
}

/// One fixture row: a known OEIS match with its quasi-affine tuple and the
/// leading terms (including a_0).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OeisMatch {
    pub a_number: String,
    pub params: [i64; 8],
    pub terms: Vec<i64>,
    pub description: String,
}

/// Built-in matches: the thirteen 0/1/2-sweep rows and the three 0/1-sweep
/// hits. Terms are the published leading terms.
pub fn fixture_matches() -> Vec<OeisMatch> {
    let row = |a: u64, params: [i64; 8], terms: &[i64], description: &str| OeisMatch {
        a_number: to_a_form(a),
        params,
        terms: terms.to_vec(),
        description: description.to_owned(),
    };
    vec![
        row(
            258173,
            [1, 1, 0, 0, 0, 1, 2, 2],
            &[1, 1, 3, 12, 58, 321, 1975, 13265],
            "Sum over Dyck paths of products of peak heights",
        ),
        row(
            6318,
            [1, 1, 0, 0, 1, 1, 0, 0],
            &[1, 2, 6, 22, 90, 394, 1806, 8558],
            "Large Schroder numbers",
        ),
        row(
            302285,
            [1, 1, 0, 0, 1, 2, 2, 2],
            &[1, 2, 7, 33, 185, 1170, 8121],
            "No combinatorial description",
        ),
        row(
            47891,
            [1, 1, 0, 0, 2, 2, 0, 0],
            &[1, 3, 12, 57, 300, 1686, 9912],
            "Planar rooted trees with tricolored end nodes",
        ),
        row(
            155866,
            [1, 1, 0, 1, 1, 1, 0, 0],
            &[1, 2, 6, 22, 91, 413, 2032],
            "Morgan-Voyce transform of the Bell numbers",
        ),
        row(
            155857,
            [1, 1, 1, 1, 1, 1, 0, 0],
            &[1, 2, 6, 23, 107, 590, 3786],
            "Row sums of triangle A155856",
        ),
        row(
            311,
            [1, 2, 2, 2, 0, 1, 2, 2],
            &[1, 1, 4, 26, 236, 2752, 39208],
            "Schroder's fourth problem; total partitions of n",
        ),
        row(
            1515,
            [1, 2, 2, 2, 1, 1, 0, 0],
            &[1, 2, 7, 37, 266, 2431, 27007],
            "Bessel polynomial y_n(x) at x = 1",
        ),
        row(
            6351,
            [1, 2, 2, 2, 1, 2, 2, 2],
            &[1, 2, 8, 52, 472, 5504, 78416],
            "Series-parallel networks with n labeled edges",
        ),
        row(
            43301,
            [1, 2, 2, 2, 2, 2, 0, 0],
            &[1, 3, 13, 77, 591, 5627, 64261],
            "a(n) = 2^n Sum (n+k)!/((n-k)! k! 4^k)",
        ),
        row(
            155867,
            [2, 1, 0, 0, 1, 1, 0, 0],
            &[1, 3, 13, 65, 355, 2061, 12501],
            "Morgan-Voyce transform of the large Schroder numbers",
        ),
        row(
            103210,
            [2, 2, 0, 0, 1, 1, 0, 0],
            &[1, 3, 15, 93, 645, 4791, 37275],
            "a(n) = (1/n) Sum C(n,i) C(n,i+1) 2^i 3^(n-i)",
        ),
        row(
            156017,
            [2, 2, 0, 0, 2, 2, 0, 0],
            &[1, 4, 24, 176, 1440, 12608],
            "Schroder paths with two rise colors and two level colors",
        ),
        row(
            187251,
            [1, 1, 0, 1, 0, 0, 1, 0],
            &[1, 1, 2, 6, 22, 94, 460, 2532, 15420, 102620, 739512],
            "Permutations with no cycle having 3 or more alternating runs",
        ),
        row(
            105072,
            [1, 1, 0, 1, 1, 0, 1, 0],
            &[1, 2, 5, 16, 63, 290, 1511, 8756, 55761, 386394, 2889181],
            "Permutations whose local maxima are in ascending order",
        ),
        row(
            230008,
            [1, 1, 1, 1, 0, 1, 0, 1],
            &[1, 1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255, 18868575],
            "Binary free multilabeled increasing trees",
        ),
    ]
}

/// OEIS search client with cache, fixtures and optional live access.
pub struct OeisClient {
    cache_dir: Option<PathBuf>,
    offline: bool,
    last_request: Mutex<Option<Instant>>,
    min_interval: Duration,
}

impl OeisClient {
    pub fn new(cache_dir: Option<PathBuf>, offline: bool) -> Self {
        OeisClient {
            cache_dir,
            offline,
            last_request: Mutex::new(None),
            min_interval: Duration::from_secs(1),
        }
    }

    /// Offline client honoring the cache-directory environment variable.
    pub fn offline_default() -> Self {
        let cache_dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
        OeisClient::new(cache_dir, true)
    }

    fn cache_path(&self, url: &str) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let mut hasher = DefaultHasher::new();
        url.hash(&mut hasher);
        Some(dir.join(format!("{:016x}.json", hasher.finish())))
    }

    fn fixture_lookup(terms: &[BigInt]) -> Vec<String> {
        // a fixture row matches when the query aligns with its stored terms
        // at some offset, either containing the whole query or agreeing on a
        // substantial prefix (the stored terms are only the published head
        // of the full sequence)
        const MIN_OVERLAP: usize = 5;
        let mut hits = Vec::new();
        for m in fixture_matches() {
            let stored: Vec<BigInt> = m.terms.iter().map(|&t| BigInt::from(t)).collect();
            let found = (0..stored.len()).any(|offset| {
                let window = &stored[offset..];
                let overlap = window.len().min(terms.len());
                (overlap == terms.len() || overlap >= MIN_OVERLAP)
                    && window[..overlap] == terms[..overlap]
            });
            if found {
                hits.push(m.a_number.clone());
            }
        }
        hits.sort();
        hits.dedup();
        hits
    }

    /// Parse the search endpoint's JSON: either an object with a `results`
    /// array of entries carrying a `number`, or a bare array of entries.
    pub fn parse_response(body: &str) -> Result<Vec<String>, OeisError> {
        let value: serde_json::Value =
            serde_json::from_str(body).map_err(|e| OeisError::MalformedResponse(e.to_string()))?;
        let entries = match &value {
            serde_json::Value::Object(map) => match map.get("results") {
                Some(serde_json::Value::Array(a)) => a.clone(),
                Some(serde_json::Value::Null) | None => Vec::new(),
                Some(other) => {
                    return Err(OeisError::MalformedResponse(format!(
                        "unexpected results field: {other}"
                    )))
                }
            },
            serde_json::Value::Array(a) => a.clone(),
            other => {
                return Err(OeisError::MalformedResponse(format!(
                    "unexpected top-level value: {other}"
                )))
            }
        };
        let mut out = Vec::new();
        for e in entries {
            let number = e
                .get("number")
                .and_then(|n| n.as_u64())
                .ok_or_else(|| OeisError::MalformedResponse("entry without number".into()))?;
            out.push(to_a_form(number));
        }
        Ok(out)
    }

    /// Look up a sequence, dropping `drop_first` leading terms before
    /// querying. Results are cached on disk keyed by the query URL.
    pub fn lookup(&self, seq: &[BigInt], drop_first: usize) -> Result<Vec<String>, OeisError> {
        if seq.len() <= drop_first {
            return Err(OeisError::InvalidQuery);
        }
        let terms = &seq[drop_first..];
        let url = query_url(terms);

        if let Some(path) = self.cache_path(&url) {
            if let Ok(body) = std::fs::read_to_string(&path) {
                return Self::parse_response(&body);
            }
        }
        let fixture_hits = Self::fixture_lookup(terms);
        if !fixture_hits.is_empty() {
            return Ok(fixture_hits);
        }
        if self.offline {
            return Err(OeisError::NetworkUnavailable(url));
        }

        // live request, rate-limited
        {
            let mut last = self.last_request.lock().unwrap();
            if let Some(t) = *last {
                let elapsed = t.elapsed();
                if elapsed < self.min_interval {
                    std::thread::sleep(self.min_interval - elapsed);
                }
            }
            *last = Some(Instant::now());
        }
        let body = ureq::get(&url)
            .call()
            .map_err(|e| OeisError::Http(e.to_string()))?
            .into_string()
            .map_err(|e| OeisError::Http(e.to_string()))?;
        if let Some(path) = self.cache_path(&url) {
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, &body)?;
        }
        Self::parse_response(&body)
    }
}

/// Result of replaying one fixture row through the sweep and lookup.
#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub a_number: String,
    pub params: [i64; 8],
    pub terms: Vec<String>,
    pub terms_match: bool,
    pub lookup_contains: bool,
    pub description: String,
}

/// Recompute each fixture row's T-fraction and check the published terms and
/// the A-number lookup; all rows must pass offline.
pub fn reproduce_table(client: &OeisClient) -> Result<Vec<RowReport>, OeisError> {
    let mut out = Vec::new();
    for m in fixture_matches() {
        let spec = quasi_affine(&QuasiAffineSpec::from_ints(m.params));
        let n_terms = m.terms.len().max(10);
        let series = expand_t(&spec, n_terms - 1);
        let seq = series_ints(&series).expect("integer series");
        let terms_match = m
            .terms
            .iter()
            .zip(&seq)
            .all(|(&want, got)| &BigInt::from(want) == got);
        let hits = client.lookup(&seq, 1)?;
        out.push(RowReport {
            lookup_contains: hits.contains(&m.a_number),
            a_number: m.a_number,
            params: m.params,
            terms: seq.iter().map(BigInt::to_string).collect(),
            terms_match,
            description: m.description,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_sizes_after_filters() {
        assert_eq!(sweep(&SweepConfig::first_sweep()).len(), 48);
        let second = SweepConfig::second_sweep();
        // count tuples without expanding: same filters
        let mut count = 0;
        for &x in &second.values[0] {
            for &y in &second.values[1] {
                for &u in &second.values[2] {
                    for &v in &second.values[3] {
                        for &a in &second.values[4] {
                            for &b in &second.values[5] {
                                for &c in &second.values[6] {
                                    for &d in &second.values[7] {
                                        if second.keep(&[x, y, u, v, a, b, c, d]) {
                                            count += 1;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(count, 2304);
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep(&SweepConfig::first_sweep());
        let b = sweep(&SweepConfig::first_sweep());
        assert_eq!(a, b);
    }

    #[test]
    fn schroder_row() {
        let rows = sweep(&SweepConfig::second_sweep());
        let (_, seq) = rows
            .iter()
            .find(|(p, _)| p == &[1, 1, 0, 0, 1, 1, 0, 0])
            .expect("tuple present");
        let expect: Vec<BigInt> = [1i64, 2, 6, 22, 90, 394]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(&seq[..6], &expect[..]);
    }

    #[test]
    fn a_form_padding() {
        assert_eq!(to_a_form(311), "A000311");
        assert_eq!(to_a_form(230008), "A230008");
    }

    #[test]
    fn fixture_lookup_finds_rows() {
        let client = OeisClient::new(None, true);
        let seq: Vec<BigInt> = [1i64, 1, 3, 11, 51, 295, 2055, 16715, 155355]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        let hits = client.lookup(&seq, 1).unwrap();
        assert!(hits.contains(&"A230008".to_owned()));
    }

    #[test]
    fn empty_query_is_rejected() {
        let client = OeisClient::new(None, true);
        assert!(matches!(
            client.lookup(&[], 0),
            Err(OeisError::InvalidQuery)
        ));
        assert!(matches!(
            client.lookup(&[BigInt::from(1)], 1),
            Err(OeisError::InvalidQuery)
        ));
    }

    #[test]
    fn offline_miss_is_network_unavailable() {
        let client = OeisClient::new(None, true);
        let seq: Vec<BigInt> = (0..12).map(|v| BigInt::from(1000 + 17 * v)).collect();
        assert!(matches!(
            client.lookup(&seq, 1),
            Err(OeisError::NetworkUnavailable(_))
        ));
    }

    #[test]
    fn response_parsing() {
        let hits =
            OeisClient::parse_response(r#"{"results": [{"number": 6318}, {"number": 311}]}"#)
                .unwrap();
        assert_eq!(hits, vec!["A006318", "A000311"]);
        let hits = OeisClient::parse_response(r#"[{"number": 230008}]"#).unwrap();
        assert_eq!(hits, vec!["A230008"]);
        assert!(OeisClient::parse_response("not json").is_err());
        assert!(OeisClient::parse_response(r#"{"results": [{"no_number": 1}]}"#).is_err());
    }

    #[test]
    fn cache_hit_matches_fixture_answer() {
        let dir = std::env::temp_dir().join(format!("tfrac-oeis-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let client = OeisClient::new(Some(dir.clone()), true);
        let seq: Vec<BigInt> = [1i64, 2, 6, 22, 90, 394, 1806, 8558]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        let offline_hits = client.lookup(&seq, 1).unwrap();
        // warm the cache with the equivalent response and query again
        let url = query_url(&seq[1..]);
        let path = client.cache_path(&url).unwrap();
        std::fs::write(&path, r#"{"results": [{"number": 6318}]}"#).unwrap();
        let cached_hits = client.lookup(&seq, 1).unwrap();
        assert_eq!(offline_hits, cached_hits);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn table_reproduces_offline() {
        let client = OeisClient::new(None, true);
        let reports = reproduce_table(&client).unwrap();
        assert_eq!(reports.len(), 16);
        for r in &reports {
            assert!(r.terms_match, "{} terms", r.a_number);
            assert!(r.lookup_contains, "{} lookup", r.a_number);
        }
    }
}
