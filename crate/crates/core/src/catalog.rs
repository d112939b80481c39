//! Catalog of the reduced graphs the extremal analysis is built on, plus
//! complete multipartite and Turán graph constructors.

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::graph::{CompositionVector, Graph};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

const CATALOG_TEXT: &str = include_str!("../assets/catalog.txt");

/// Identifier of a reduced (basis) graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReducedGraphId {
    /// Complete graph on `r >= 1` vertices.
    Complete(usize),
    G1,
    G7,
    G10,
    /// The diamond: K4 minus one edge.
    H,
    H1,
    H2,
    H3,
    H4,
}

impl fmt::Display for ReducedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedGraphId::Complete(r) => write!(f, "K{r}"),
            ReducedGraphId::G1 => write!(f, "G1"),
            ReducedGraphId::G7 => write!(f, "G7"),
            ReducedGraphId::G10 => write!(f, "G10"),
            ReducedGraphId::H => write!(f, "H"),
            ReducedGraphId::H1 => write!(f, "H1"),
            ReducedGraphId::H2 => write!(f, "H2"),
            ReducedGraphId::H3 => write!(f, "H3"),
            ReducedGraphId::H4 => write!(f, "H4"),
        }
    }
}

impl FromStr for ReducedGraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReducedGraphId> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        let id = match lower.as_str() {
            "g1" => ReducedGraphId::G1,
            "g7" => ReducedGraphId::G7,
            "g10" => ReducedGraphId::G10,
            "h" => ReducedGraphId::H,
            "h1" => ReducedGraphId::H1,
            "h2" => ReducedGraphId::H2,
            "h3" => ReducedGraphId::H3,
            "h4" => ReducedGraphId::H4,
            _ => {
                let r = lower
                    .strip_prefix('k')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&r| r >= 1)
                    .ok_or_else(|| Error::UnknownGraphId(t.to_string()))?;
                ReducedGraphId::Complete(r)
            }
        };
        Ok(id)
    }
}

fn parsed_catalog() -> &'static HashMap<String, Graph> {
    static CACHE: OnceLock<HashMap<String, Graph>> = OnceLock::new();
    CACHE.get_or_init(|| {
        parse_catalog_text(CATALOG_TEXT).expect("bundled catalog must parse")
    })
}

fn parse_catalog_text(text: &str) -> Result<HashMap<String, Graph>> {
    let mut map = HashMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let name = tokens
            .next()
            .ok_or_else(|| Error::GoldenData("catalog line missing name".into()))?;
        let order: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::GoldenData(format!("catalog `{name}`: bad order")))?;
        let mut edges = Vec::new();
        for tok in tokens {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::GoldenData(format!("catalog `{name}`: bad edge `{tok}`")))?;
            let a: usize = a
                .parse()
                .map_err(|_| Error::GoldenData(format!("catalog `{name}`: bad edge `{tok}`")))?;
            let b: usize = b
                .parse()
                .map_err(|_| Error::GoldenData(format!("catalog `{name}`: bad edge `{tok}`")))?;
            if a == 0 || b == 0 {
                return Err(Error::GoldenData(format!("catalog `{name}`: vertices are 1-based")));
            }
            edges.push((a - 1, b - 1));
        }
        let labels = (1..=order).map(|i| format!("v{i}")).collect();
        let g = Graph::from_edges(order, &edges)
            .map_err(|e| Error::GoldenData(format!("catalog `{name}`: {e}")))?
            .with_labels(labels)?;
        if map.insert(name.to_string(), g).is_some() {
            return Err(Error::GoldenData(format!("catalog `{name}`: duplicate entry")));
        }
    }
    Ok(map)
}

/// Look up a reduced graph by id. Complete graphs are built on demand.
pub fn catalog(id: ReducedGraphId) -> Result<Graph> {
    match id {
        ReducedGraphId::Complete(r) => {
            if r == 0 {
                return Err(Error::InvalidArgument("complete graph needs at least one vertex".into()));
            }
            let mut edges = Vec::with_capacity(r * (r - 1) / 2);
            for i in 0..r {
                for j in (i + 1)..r {
                    edges.push((i, j));
                }
            }
            let labels = (1..=r).map(|i| format!("v{i}")).collect();
            Graph::from_edges(r, &edges)?.with_labels(labels)
        }
        other => {
            let key = other.to_string().to_ascii_lowercase();
            parsed_catalog()
                .get(&key)
                .cloned()
                .ok_or_else(|| Error::UnknownGraphId(key))
        }
    }
}

/// Complete multipartite graph `K_{n1,...,nk}`: independent classes of the
/// given sizes, all cross edges present.
pub fn complete_multipartite(parts: &CompositionVector) -> Graph {
    let offsets = parts.offsets();
    let k = parts.len();
    let mut g = Graph::new(parts.total());
    for i in 0..k {
        for j in (i + 1)..k {
            for a in offsets[i]..offsets[i + 1] {
                for b in offsets[j]..offsets[j + 1] {
                    g.set_edge(a, b, true);
                }
            }
        }
    }
    g
}

/// Turán graph `T(n, r)`: the complete `r`-partite graph on `n` vertices with
/// classes as equal as possible (`n mod r` classes of size `ceil(n/r)` first).
/// For `r >= n` this is the complete graph.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidArgument("Turán graph needs n >= 1 and r >= 1".into()));
    }
    let r = r.min(n);
    let big = n.div_ceil(r);
    let small = n / r;
    let bigs = n % r;
    let mut parts = Vec::with_capacity(r);
    parts.extend(std::iter::repeat(big).take(bigs));
    parts.extend(std::iter::repeat(small).take(r - bigs));
    Ok(complete_multipartite(&CompositionVector::new(parts)?))
}

/// Characteristic polynomial of `K_{n1,...,nk}` assembled from the closed
/// form `x^(n-k) * ( prod (x + n_i) - sum n_i * prod_{j != i} (x + n_j) )`,
/// entirely in integer arithmetic.
pub fn multipartite_charpoly(parts: &CompositionVector) -> IntPolynomial {
    let n = parts.total();
    let k = parts.len();
    let mut prod = IntPolynomial::one();
    for &p in parts.parts() {
        let factor = IntPolynomial::from_coeffs(vec![BigInt::from(p), BigInt::from(1)]);
        prod = &prod * &factor;
    }
    let mut acc = prod.clone();
    for &p in parts.parts() {
        let factor = IntPolynomial::from_coeffs(vec![BigInt::from(p), BigInt::from(1)]);
        let cofactor = prod.divide_exact(&factor).expect("factor divides the product");
        acc = &acc - &cofactor.scale(&BigInt::from(p));
    }
    acc.mul_monomial(&BigInt::from(1), n - k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_degree_sequences() {
        let g1 = catalog(ReducedGraphId::G1).unwrap();
        let mut d = g1.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 2, 2, 2, 1]);
        assert_eq!(g1.degree(0), 3); // v1 is the degree-3 vertex

        let g7 = catalog(ReducedGraphId::G7).unwrap();
        assert_eq!(g7.degrees(), vec![2; 5]);
        assert_eq!(g7.edge_count(), 5);
        assert!(g7.is_connected());

        let g10 = catalog(ReducedGraphId::G10).unwrap();
        let mut d = g10.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![3, 3, 3, 2, 2, 1]);

        let h = catalog(ReducedGraphId::H).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(!h.has_edge(0, 3));
    }

    #[test]
    fn blown_catalog_entries_match_their_definitions() {
        let g1 = catalog(ReducedGraphId::G1).unwrap();
        let g10 = catalog(ReducedGraphId::G10).unwrap();
        let cases = [
            (ReducedGraphId::H1, &g1, vec![1, 1, 1, 1, 2]),
            (ReducedGraphId::H2, &g10, vec![1, 1, 1, 1, 1, 2]),
            (ReducedGraphId::H3, &g10, vec![1, 1, 1, 1, 2, 1]),
            (ReducedGraphId::H4, &g10, vec![1, 1, 1, 1, 1, 3]),
        ];
        for (id, base, parts) in cases {
            let m = CompositionVector::new(parts).unwrap();
            assert_eq!(catalog(id).unwrap(), base.blow_up(&m).unwrap(), "{id}");
        }
    }

    #[test]
    fn complete_graphs_and_ids() {
        let k4 = catalog(ReducedGraphId::Complete(4)).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(catalog(ReducedGraphId::Complete(0)).is_err());
        assert_eq!("K7".parse::<ReducedGraphId>().unwrap(), ReducedGraphId::Complete(7));
        assert_eq!("g10".parse::<ReducedGraphId>().unwrap(), ReducedGraphId::G10);
        assert_eq!("H2".parse::<ReducedGraphId>().unwrap(), ReducedGraphId::H2);
        assert!("G3".parse::<ReducedGraphId>().is_err());
        assert!("K0".parse::<ReducedGraphId>().is_err());
        assert!("".parse::<ReducedGraphId>().is_err());
        for id in ["K7", "G1", "G10", "H", "H4"] {
            let parsed: ReducedGraphId = id.parse().unwrap();
            assert_eq!(parsed.to_string(), id);
        }
    }

    #[test]
    fn multipartite_construction() {
        // K_{2,3} is bipartite with all 6 cross edges.
        let m = CompositionVector::new(vec![2, 3]).unwrap();
        let g = complete_multipartite(&m);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
        assert!(g.has_edge(0, 2) && g.has_edge(1, 4));
        // Equals the blow-up of K2.
        let k2 = catalog(ReducedGraphId::Complete(2)).unwrap();
        assert_eq!(g, k2.blow_up(&m).unwrap());
    }

    #[test]
    fn turan_graphs() {
        // T(6,3) = K_{2,2,2}.
        let t = turan(6, 3).unwrap();
        assert_eq!(t, complete_multipartite(&CompositionVector::new(vec![2, 2, 2]).unwrap()));
        // T(5,2) = K_{3,2}.
        let t = turan(5, 2).unwrap();
        assert_eq!(t, complete_multipartite(&CompositionVector::new(vec![3, 2]).unwrap()));
        // r >= n gives the complete graph.
        assert_eq!(turan(4, 9).unwrap(), catalog(ReducedGraphId::Complete(4)).unwrap());
        // r = 1 gives the empty graph.
        assert_eq!(turan(3, 1).unwrap().edge_count(), 0);
        assert!(turan(0, 2).is_err());
        // Part sizes in every Turán graph differ by at most one and the big
        // parts come first.
        for n in 1..=12 {
            for r in 1..=n {
                let t = turan(n, r).unwrap();
                assert_eq!(t.n(), n);
                // count edges: n(n-1)/2 - sum C(size_i, 2)
                let big = n.div_ceil(r);
                let small = n / r;
                let bigs = n % r;
                let internal = bigs * big * (big - 1) / 2 + (r - bigs) * small * (small - 1) / 2;
                assert_eq!(t.edge_count(), n * (n - 1) / 2 - internal);
            }
        }
    }

    #[test]
    fn multipartite_charpoly_matches_direct_computation() {
        // Every composition with total <= 8.
        for total in 1..=8usize {
            for parts in all_compositions(total) {
                let m = CompositionVector::new(parts).unwrap();
                let g = complete_multipartite(&m);
                let direct = g.adjacency_matrix().charpoly().unwrap();
                assert_eq!(multipartite_charpoly(&m), direct, "parts {m}");
            }
        }
    }

    #[test]
    fn multipartite_charpoly_known_cases() {
        // K_{1,1} = K2: x^2 - 1.
        let m = CompositionVector::new(vec![1, 1]).unwrap();
        assert_eq!(multipartite_charpoly(&m), IntPolynomial::from_i64_coeffs(&[-1, 0, 1]));
        // K_{a,b}: x^(a+b-2) (x^2 - ab).
        for (a, b) in [(2usize, 3usize), (4, 7), (1, 9)] {
            let m = CompositionVector::new(vec![a, b]).unwrap();
            let expect = IntPolynomial::from_i64_coeffs(&[-((a * b) as i64), 0, 1])
                .mul_monomial(&num_bigint::BigInt::from(1), a + b - 2);
            assert_eq!(multipartite_charpoly(&m), expect);
        }
    }

    fn all_compositions(total: usize) -> Vec<Vec<usize>> {
        // Compositions of `total` into any number of positive parts.
        let mut out = vec![];
        fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            for p in 1..=rem {
                cur.push(p);
                rec(rem - p, cur, out);
                cur.pop();
            }
        }
        rec(total, &mut Vec::new(), &mut out);
        out
    }
}
