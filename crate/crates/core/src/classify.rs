//! Membership tests, constructive family recognition and forbidden subgraphs.

use std::fmt;
use std::sync::OnceLock;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{forbidden_catalog, parse_named};
use crate::enumerate::connected_levels;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::induced::Pattern;
use crate::mixext::{expand, ExtensionType};
use crate::reduction::PositionConstraint::{self, Clique, Coclique, Exact};
use crate::reduction::{recognize_extension, twin_partition};
use crate::spectrum::{nontrivial_count, spectral_summary};

/// Parameters `(p, q, s)` for which the extension of `P4` of type `(p, q, -r, s)`
/// has at most three eigenvalues outside `{0, -1}` for every `r >= 1`.
pub const P4_CLIQUE_COCLIQUE_TRIPLES: [(i64, i64, i64); 10] =
    [(3, 3, 6), (3, 4, 4), (3, 6, 3), (4, 2, 6), (4, 3, 3), (4, 6, 2), (5, 2, 4), (5, 4, 2), (7, 2, 3), (7, 3, 2)];

/// Types `(p, q, r, s)`, all entries at least 2, for which the clique extension of
/// `P4` lies in the class; one representative per reversal (`p <= s`, and
/// `q <= r` when `p = s`).
pub const P4_CLIQUE_QUADRUPLES: [(i64, i64, i64, i64); 8] =
    [(2, 2, 2, 7), (2, 2, 3, 4), (2, 2, 6, 3), (2, 3, 2, 5), (2, 3, 4, 3), (2, 5, 2, 4), (2, 5, 3, 3), (3, 2, 2, 3)];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    /// No edges at all.
    #[serde(rename = "Edgeless")]
    Edgeless,
    #[serde(rename = "Km")]
    Complete,
    #[serde(rename = "Kp+Kq")]
    TwoCliques,
    #[serde(rename = "Kpq")]
    CompleteBipartite,
    #[serde(rename = "CSpq")]
    CompleteSplit,
    #[serde(rename = "Kp+Kq+Kr")]
    ThreeCliques,
    #[serde(rename = "Kp+Kqr")]
    CliqueAndBipartite,
    #[serde(rename = "Kp+CSqr")]
    CliqueAndSplit,
    #[serde(rename = "Kpqr")]
    CompleteTripartite,
    #[serde(rename = "K3(-p,-q,r)")]
    K3Extension,
    #[serde(rename = "P3(*,*,r)")]
    P3Extension,
    #[serde(rename = "P4(p,-3,-2,-2)")]
    P4CocliqueTail,
    #[serde(rename = "P4(-2,q,r,-2)")]
    P4CocliqueEnds,
    #[serde(rename = "P4(p,-2,r,-3)")]
    P4Alternating,
    #[serde(rename = "P4(p,q,-r,s)")]
    P4OneCoclique,
    #[serde(rename = "P4(p,q,r,s)")]
    P4Cliques,
    #[serde(rename = "P5(.,p,-q,r,.)")]
    P5Extension,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Edgeless => "Edgeless",
            Family::Complete => "Km",
            Family::TwoCliques => "Kp+Kq",
            Family::CompleteBipartite => "Kpq",
            Family::CompleteSplit => "CSpq",
            Family::ThreeCliques => "Kp+Kq+Kr",
            Family::CliqueAndBipartite => "Kp+Kqr",
            Family::CliqueAndSplit => "Kp+CSqr",
            Family::CompleteTripartite => "Kpqr",
            Family::K3Extension => "K3(-p,-q,r)",
            Family::P3Extension => "P3(*,*,r)",
            Family::P4CocliqueTail => "P4(p,-3,-2,-2)",
            Family::P4CocliqueEnds => "P4(-2,q,r,-2)",
            Family::P4Alternating => "P4(p,-2,r,-3)",
            Family::P4OneCoclique => "P4(p,q,-r,s)",
            Family::P4Cliques => "P4(p,q,r,s)",
            Family::P5Extension => "P5(.,p,-q,r,.)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family a graph belongs to, with its parameters and an explicit
/// construction: `expand(base, type)` plus `isolated` extra vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ClassLabel {
    pub family: Family,
    pub params: Vec<i64>,
    pub base: String,
    #[serde(rename = "type")]
    pub ext_type: ExtensionType,
    pub isolated: usize,
}

impl ClassLabel {
    fn new(family: Family, params: Vec<i64>, base: &str, t: Vec<i64>) -> Self {
        ClassLabel {
            family,
            params,
            base: base.to_string(),
            ext_type: ExtensionType::new(t).expect("label types are valid").normalized(),
            isolated: 0,
        }
    }

    /// Builds the graph the label describes.
    pub fn reconstruct(&self) -> Result<Graph> {
        let h = expand(&parse_named(&self.base)?, &self.ext_type)?;
        if self.isolated == 0 {
            return Ok(h);
        }
        h.disjoint_union(&Graph::empty(self.isolated)?)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(i64::to_string).collect();
        write!(f, "{}[{}] = {}({})", self.family, params.join(","), self.base, self.ext_type)?;
        if self.isolated > 0 {
            write!(f, " + {}K1", self.isolated)?;
        }
        Ok(())
    }
}

/// At most three eigenvalues outside `{0, -1}`.
pub fn in_class_g(g: &Graph) -> bool {
    nontrivial_count(g) <= 3
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Subclass {
    /// In the class and without isolated vertices.
    pub in_g0: bool,
    /// Connected, two positive eigenvalues, one below `-1`, none in `(-1, 0)`.
    pub in_gpp: bool,
}

pub fn subclass(g: &Graph) -> Result<Subclass> {
    let no_isolated = g.isolated_vertices().is_empty();
    let in_g0 = no_isolated && in_class_g(g);
    let in_gpp = g.is_connected() && {
        let s = spectral_summary(g)?;
        s.n_pos == 2 && s.n_lt_neg1 == 1 && s.n_between == 0
    };
    Ok(Subclass { in_g0, in_gpp })
}

/// Every component is complete.
pub fn is_disjoint_union_of_cliques(g: &Graph) -> bool {
    g.components().into_iter().all(|c| bits(c).all(|v| g.neighbors(v) == c & !bit(v)))
}

/// Complete multipartite with at least one edge, after removing isolated vertices.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    match g.without_isolated() {
        Some(h) => h.edge_count() > 0 && is_disjoint_union_of_cliques(&h.complement()),
        None => false,
    }
}

fn bases() -> &'static [(&'static str, Graph)] {
    static BASES: OnceLock<Vec<(&'static str, Graph)>> = OnceLock::new();
    BASES.get_or_init(|| {
        ["K1", "K2", "P3", "K3", "P4", "P5"]
            .into_iter()
            .map(|name| (name, parse_named(name).expect("known base")))
            .collect()
    })
}

/// All family labels of `g`. Empty exactly when `g` has more than three
/// eigenvalues outside `{0, -1}`.
pub fn classify(g: &Graph) -> Vec<ClassLabel> {
    let isolated = g.isolated_vertices().len();
    let Some(h) = g.without_isolated() else {
        let n = g.order() as i64;
        let t = if n == 1 { 1 } else { -n };
        return vec![ClassLabel::new(Family::Edgeless, vec![n], "K1", vec![t])];
    };
    let mut labels = if h.is_connected() { connected_labels(&h) } else { disconnected_labels(&h) };
    for l in &mut labels {
        l.isolated = isolated;
    }
    labels.sort();
    labels.dedup();
    labels
}

fn connected_labels(h: &Graph) -> Vec<ClassLabel> {
    let classes = twin_partition(h).len();
    let mut out = Vec::new();
    for (name, base) in bases() {
        if base.order() < classes || base.order() > h.order() {
            continue;
        }
        let types = recognize_extension(h, base, &PositionConstraint::any(base.order())).expect("lengths agree");
        for t in types {
            out.extend(label_for(name, t.entries()));
        }
    }
    out
}

fn label_for(base: &str, t: &[i64]) -> Option<ClassLabel> {
    let abs = |x: i64| x.abs();
    let label = |family, params| Some(ClassLabel::new(family, params, base, t.to_vec()));
    match (base, t) {
        ("K1", &[m]) if m >= 2 => label(Family::Complete, vec![m]),
        ("K2", &[a, b]) if a < 0 && b < 0 && a >= b => label(Family::CompleteBipartite, vec![-a, -b]),
        ("K2", &[a, b]) if a < 0 && b > 0 => label(Family::CompleteSplit, vec![-a, b]),
        ("K3", &[a, b, c]) if a < 0 && b < 0 && c < 0 && a >= b && b >= c => {
            label(Family::CompleteTripartite, vec![-a, -b, -c])
        }
        ("K3", &[a, b, c]) if a < 0 && b < 0 && c > 0 && a >= b => label(Family::K3Extension, vec![-a, -b, c]),
        ("P3", _) => oriented(base, t, Family::P3Extension, |t| t[2] >= 2, |t| t.to_vec()),
        ("P4", _) => p4_label(t),
        ("P5", _) => oriented(
            base,
            t,
            Family::P5Extension,
            |t| P5_SCHEMA.iter().zip(t).all(|(c, &x)| c.admits(x)),
            |t| vec![t[1], abs(t[2]), t[3]],
        ),
        _ => None,
    }
}

const POS: PositionConstraint = Clique { min: 1 };
const P5_SCHEMA: [PositionConstraint; 5] = [Exact(1), POS, Coclique { min: 1 }, POS, Exact(1)];
const P4_TAIL: [PositionConstraint; 4] = [POS, Exact(-3), Exact(-2), Exact(-2)];
const P4_ENDS: [PositionConstraint; 4] = [Exact(-2), POS, POS, Exact(-2)];
const P4_ALTERNATING: [PositionConstraint; 4] = [POS, Exact(-2), POS, Exact(-3)];

fn admitted(schema: &[PositionConstraint], t: &[i64]) -> bool {
    schema.iter().zip(t).all(|(c, &x)| c.admits(x))
}

/// Labels `t` if it fits the schema, unless its reversal fits too and sorts first.
fn oriented(
    base: &str,
    t: &[i64],
    family: Family,
    fits: impl Fn(&[i64]) -> bool,
    params: impl Fn(&[i64]) -> Vec<i64>,
) -> Option<ClassLabel> {
    if !fits(t) {
        return None;
    }
    let rev: Vec<i64> = t.iter().rev().copied().collect();
    if fits(&rev) && rev.as_slice() < t {
        return None;
    }
    Some(ClassLabel::new(family, params(t), base, t.to_vec()))
}

fn p4_label(t: &[i64]) -> Option<ClassLabel> {
    let signed = |t: &[i64]| t.to_vec();
    let one_coclique = |t: &[i64]| {
        admitted(&[POS, POS, Coclique { min: 1 }, POS], t) && P4_CLIQUE_COCLIQUE_TRIPLES.contains(&(t[0], t[1], t[3]))
    };
    let cliques = |t: &[i64]| t.iter().all(|&x| x >= 2) && P4_CLIQUE_QUADRUPLES.contains(&(t[0], t[1], t[2], t[3]));
    [
        oriented("P4", t, Family::P4CocliqueTail, |t| admitted(&P4_TAIL, t), signed),
        oriented("P4", t, Family::P4CocliqueEnds, |t| admitted(&P4_ENDS, t), signed),
        oriented("P4", t, Family::P4Alternating, |t| admitted(&P4_ALTERNATING, t), signed),
        oriented("P4", t, Family::P4OneCoclique, one_coclique, |t| vec![t[0], t[1], t[2].abs(), t[3]]),
        oriented("P4", t, Family::P4Cliques, cliques, signed),
    ]
    .into_iter()
    .flatten()
    .next()
}

/// A component shape allowed in a disconnected member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Component {
    Clique(i64),
    Bipartite(i64, i64),
    Split(i64, i64),
}

fn component_shape(c: &Graph) -> Option<Component> {
    connected_labels(c).into_iter().find_map(|l| match (l.family, l.params.as_slice()) {
        (Family::Complete, &[m]) => Some(Component::Clique(m)),
        (Family::CompleteBipartite, &[p, q]) => Some(Component::Bipartite(p, q)),
        (Family::CompleteSplit, &[p, q]) => Some(Component::Split(p, q)),
        _ => None,
    })
}

fn disconnected_labels(h: &Graph) -> Vec<ClassLabel> {
    let mut shapes = Vec::new();
    for mask in h.components() {
        match component_shape(&h.induced_by_mask(mask)) {
            Some(s) => shapes.push(s),
            None => return Vec::new(),
        }
    }
    shapes.sort();
    use Component::*;
    let label = match *shapes.as_slice() {
        [Clique(p), Clique(q)] => ClassLabel::new(Family::TwoCliques, vec![p, q], "2K1", vec![p, q]),
        [Clique(p), Clique(q), Clique(r)] => ClassLabel::new(Family::ThreeCliques, vec![p, q, r], "3K1", vec![p, q, r]),
        [Clique(p), Bipartite(q, r)] => {
            ClassLabel::new(Family::CliqueAndBipartite, vec![p, q, r], "K1+K2", vec![p, -q, -r])
        }
        [Clique(p), Split(q, r)] => ClassLabel::new(Family::CliqueAndSplit, vec![p, q, r], "K1+K2", vec![p, -q, r]),
        _ => return Vec::new(),
    };
    vec![label]
}

/// An occurrence of a forbidden graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub name: String,
    pub vertices: Vec<usize>,
}

fn forbidden_patterns() -> &'static [(&'static str, Pattern)] {
    static PATTERNS: OnceLock<Vec<(&'static str, Pattern)>> = OnceLock::new();
    PATTERNS.get_or_init(|| forbidden_catalog().into_iter().map(|f| (f.name, Pattern::new(&f.graph))).collect())
}

/// Every catalog graph occurring as an induced subgraph, each with its least witness.
pub fn forbidden_scan(g: &Graph) -> Vec<ForbiddenWitness> {
    forbidden_patterns()
        .iter()
        .filter_map(|(name, p)| p.find_in(g).map(|vertices| ForbiddenWitness { name: name.to_string(), vertices }))
        .collect()
}

/// Largest order accepted by [`minimal_forbidden`].
pub const MAX_MINING_ORDER: usize = 7;

/// The predicate whose failure interlacing forbids inside the connected
/// members with exactly two positive eigenvalues and one below `-1`.
pub fn interlacing_admissible(g: &Graph) -> bool {
    spectral_summary(g).map(|s| s.n_pos <= 2 && s.n_lt_neg1 <= 1).unwrap_or(false)
}

/// Connected graphs on at most `max_n` vertices failing `pred` while every
/// proper induced subgraph satisfies it, by increasing order.
pub fn minimal_forbidden<P>(max_n: usize, pred: P) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    if max_n == 0 || max_n > MAX_MINING_ORDER {
        return Err(Error::OutOfRange { what: "mining order", value: max_n });
    }
    let levels = connected_levels(max_n)?;
    let is_minimal = |g: &Graph| {
        if pred(g) {
            return false;
        }
        let n = g.order();
        let full = g.vertex_mask();
        let deleted = (0..n).map(|v| full & !bit(v));
        let others = (1..full).filter(|m: &u64| m.count_ones() < n as u32 - 1);
        deleted.chain(others).all(|m| m == 0 || pred(&g.induced_by_mask(m)))
    };
    let mut out = Vec::new();
    for level in &levels {
        #[cfg(feature = "parallel")]
        let found: Vec<Graph> = level.par_iter().filter(|g| is_minimal(g)).cloned().collect();
        #[cfg(not(feature = "parallel"))]
        let found: Vec<Graph> = level.iter().filter(|g| is_minimal(g)).cloned().collect();
        out.extend(found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::catalog::{complete, complete_multipartite, cycle, path, pineapple};

    fn ty(s: &str) -> ExtensionType {
        s.parse().unwrap()
    }

    fn families(g: &Graph) -> Vec<Family> {
        classify(g).into_iter().map(|l| l.family).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(in_class_g(&complete_multipartite(&[2, 2, 1]).unwrap()));
        assert!(!in_class_g(&path(4).unwrap()));
        assert!(in_class_g(&pineapple(3, 2).unwrap()));
    }

    #[test]
    fn subclass_examples() {
        assert!(subclass(&path(5).unwrap()).unwrap().in_gpp);
        assert!(!subclass(&complete_multipartite(&[2, 3, 4]).unwrap()).unwrap().in_gpp);
        let two = complete(5).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        assert_eq!(subclass(&two).unwrap(), Subclass { in_g0: true, in_gpp: false });
    }

    #[test]
    fn classify_examples() {
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let labels = classify(&k23);
        assert!(labels.iter().any(|l| l.family == Family::CompleteBipartite && l.params == [2, 3]));
        let h = expand(&path(4).unwrap(), &ty("2,2,2,7")).unwrap();
        let labels = classify(&h);
        assert!(labels.iter().any(|l| l.family == Family::P4Cliques && l.params == [2, 2, 2, 7]));
        assert!(classify(&cycle(5).unwrap()).is_empty());
        assert!(families(&path(5).unwrap()).contains(&Family::P5Extension));
        assert_eq!(families(&Graph::empty(3).unwrap()), vec![Family::Edgeless]);
    }

    #[test]
    fn disconnected_examples() {
        let g = parse_named("K3+K2+K4").unwrap();
        assert_eq!(families(&g), vec![Family::ThreeCliques]);
        let g = parse_named("K3+P3").unwrap();
        let l = classify(&g);
        assert_eq!(l.len(), 1);
        assert_eq!((l[0].family, l[0].params.clone()), (Family::CliqueAndSplit, vec![3, 2, 1]));
        assert!(classify(&parse_named("P3+P3").unwrap()).is_empty());
        assert!(classify(&parse_named("K2+K2+K2+K2").unwrap()).is_empty());
    }

    #[test]
    fn labels_reconstruct() {
        for g in [
            parse_named("K3+Kpq(2,3)").unwrap(),
            pineapple(3, 2).unwrap(),
            path(5).unwrap().disjoint_union(&Graph::empty(2).unwrap()).unwrap(),
            expand(&path(4).unwrap(), &ty("-2,3,1,-2")).unwrap(),
        ] {
            let labels = classify(&g);
            assert!(!labels.is_empty());
            for l in labels {
                assert!(is_isomorphic(&l.reconstruct().unwrap(), &g), "{l}");
            }
        }
    }

    #[test]
    fn structure_tests() {
        let k3k5 = complete(3).unwrap().disjoint_union(&complete(5).unwrap()).unwrap();
        assert!(is_disjoint_union_of_cliques(&k3k5));
        assert!(!is_complete_multipartite(&k3k5));
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(!is_disjoint_union_of_cliques(&k222));
        assert!(is_complete_multipartite(&k222));
        let p3 = path(3).unwrap();
        assert!(!is_disjoint_union_of_cliques(&p3));
        assert!(is_complete_multipartite(&p3));
    }

    #[test]
    fn scanner_examples() {
        let c5 = cycle(5).unwrap();
        let w = forbidden_scan(&c5);
        assert_eq!(w, vec![ForbiddenWitness { name: "C5".into(), vertices: vec![0, 1, 2, 3, 4] }]);
        assert!(forbidden_scan(&cycle(7).unwrap()).iter().any(|w| w.name == "P6"));
        assert!(forbidden_scan(&pineapple(3, 2).unwrap()).is_empty());
    }

    #[test]
    fn mining_small() {
        assert!(minimal_forbidden(4, interlacing_admissible).unwrap().is_empty());
        assert!(minimal_forbidden(8, interlacing_admissible).is_err());
    }
}
