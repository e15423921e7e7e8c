//! Cut predicates and classification: tight and separating cuts, bricks
//! (two independent tests), braces, extremal and solid bricks, and the
//! cover-pair criterion for bricks glued along a separating cut.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::constructions::triangle_insert;
use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity_at_least, EdgeCut, MultiGraph, VertexId};
use crate::matching::{
    self, count_perfect_matchings, enumerate_perfect_matchings, is_matching_covered,
};

/// Vertex cap for the exhaustive tight-cut scan.
pub const TIGHT_SCAN_LIMIT: usize = 16;
/// Vertex cap for the exhaustive separating-cut scan.
pub const SOLID_SCAN_LIMIT: usize = 14;

/// `|E| - |V| + 1`.
pub fn dimension(g: &MultiGraph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64 + 1
}

fn recut(g: &MultiGraph, cut: &EdgeCut) -> Result<EdgeCut> {
    let fresh = g.edge_cut(&cut.side)?;
    if fresh.edges != cut.edges {
        return Err(Error::InvalidCut(
            "edge set does not match the side in this graph",
        ));
    }
    Ok(fresh)
}

/// Every perfect matching meets the cut in exactly one edge.
pub fn is_tight_cut(g: &MultiGraph, cut: &EdgeCut) -> Result<bool> {
    let cut = recut(g, cut)?;
    let census = enumerate_perfect_matchings(g)?;
    Ok(census
        .matchings()
        .iter()
        .all(|m| m.edges().iter().filter(|e| cut.edges.contains(e)).count() == 1))
}

/// The two cut contractions `G/X` and `G/X̄`, in that order.
pub fn cut_contractions(g: &MultiGraph, cut: &EdgeCut) -> Result<(MultiGraph, MultiGraph)> {
    let cut = recut(g, cut)?;
    let other: BTreeSet<VertexId> = g.vertices().filter(|v| !cut.side.contains(v)).collect();
    let (shrink_side, _) = g.contract(&cut.side, None)?;
    let (shrink_other, _) = g.contract(&other, None)?;
    Ok((shrink_side, shrink_other))
}

/// Both cut contractions are matching covered.
pub fn is_separating_cut(g: &MultiGraph, cut: &EdgeCut) -> Result<bool> {
    let (a, b) = cut_contractions(g, cut)?;
    Ok(is_matching_covered(&a) && is_matching_covered(&b))
}

/// Brick test via the Edmonds–Lovász–Pulleyblank characterisation:
/// 3-connected, and `G - {x, y}` has a perfect matching for every pair of
/// distinct vertices. Graphs of odd order or fewer than four vertices are
/// never bricks.
pub fn is_brick_elp(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || n % 2 == 1 {
        return false;
    }
    if !vertex_connectivity_at_least(g, 3).expect("order checked") {
        return false;
    }
    let d = g.dense();
    (0..n).into_par_iter().all(|x| {
        let mut free = vec![true; n];
        free[x] = false;
        (x + 1..n).all(|y| {
            free[y] = false;
            let ok = matching::residual_has_perfect_matching(&d, &free);
            free[y] = true;
            ok
        })
    })
}

/// Scans every cut `∂(X)` with `2 <= |X| <= n-2` (one representative per
/// complementary pair) and returns the first tight one, if any.
pub fn find_nontrivial_tight_cut(g: &MultiGraph) -> Result<Option<EdgeCut>> {
    let n = g.vertex_count();
    if n > TIGHT_SCAN_LIMIT {
        return Err(Error::Scale {
            what: "exhaustive tight-cut scan",
            limit: TIGHT_SCAN_LIMIT,
            actual: n,
        });
    }
    if n < 4 {
        return Ok(None);
    }
    let d = g.dense();
    let census = enumerate_perfect_matchings(g)?;
    let pairs: Vec<Vec<(usize, usize)>> = census
        .matchings()
        .iter()
        .map(|m| {
            m.edges()
                .iter()
                .map(|e| {
                    let (a, b) = g.endpoints(*e).expect("matching edge");
                    (d.index[&a], d.index[&b])
                })
                .collect()
        })
        .collect();
    for rest in 0u32..(1 << (n - 1)) {
        let mask = 1 | (rest << 1);
        let size = mask.count_ones() as usize;
        if size < 2 || size > n - 2 {
            continue;
        }
        let inside = |v: usize| mask >> v & 1 == 1;
        let tight = pairs
            .iter()
            .all(|m| m.iter().filter(|&&(a, b)| inside(a) != inside(b)).count() == 1);
        if tight {
            let side: BTreeSet<VertexId> =
                (0..n).filter(|&v| inside(v)).map(|v| d.ids[v]).collect();
            return Ok(Some(g.edge_cut(&side)?));
        }
    }
    Ok(None)
}

/// Brick test straight from the definition: matching covered, nonbipartite
/// and free of nontrivial tight cuts. Exhaustive, so capped at
/// [`TIGHT_SCAN_LIMIT`] vertices.
pub fn is_brick_by_definition(g: &MultiGraph) -> Result<bool> {
    check_scan_limit(g)?;
    Ok(is_matching_covered(g) && !g.is_bipartite() && find_nontrivial_tight_cut(g)?.is_none())
}

/// Matching covered, bipartite and free of nontrivial tight cuts.
pub fn is_brace(g: &MultiGraph) -> Result<bool> {
    check_scan_limit(g)?;
    Ok(is_matching_covered(g) && g.is_bipartite() && find_nontrivial_tight_cut(g)?.is_none())
}

fn check_scan_limit(g: &MultiGraph) -> Result<()> {
    if g.vertex_count() > TIGHT_SCAN_LIMIT {
        return Err(Error::Scale {
            what: "exhaustive tight-cut scan",
            limit: TIGHT_SCAN_LIMIT,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

/// Perfect-matching count equals `|E| - |V| + 1`. The caller is
/// responsible for `g` being a brick.
pub fn is_extremal(g: &MultiGraph) -> Result<bool> {
    Ok(count_perfect_matchings(g)? as i64 == dimension(g))
}

/// Every edge of the cut is incident with `x` (inside) or `y` (outside).
pub fn covers_cut(g: &MultiGraph, cut: &EdgeCut, x: VertexId, y: VertexId) -> Result<bool> {
    if !cut.side.contains(&x) {
        return Err(Error::Precondition(format!("{x} is not on the cut side")));
    }
    if !g.contains_vertex(y) || cut.side.contains(&y) {
        return Err(Error::Precondition(format!(
            "{y} is not on the far side of the cut"
        )));
    }
    for &e in &cut.edges {
        let (a, b) = g.endpoints(e)?;
        if a != x && b != x && a != y && b != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brickness of a matching covered graph with a nontrivial separating cut
/// whose two contractions are bricks: it is a brick iff no pair of
/// vertices, one on each shore, covers the cut. The hypotheses are checked
/// and a failure names the one that does not hold.
pub fn lemma1_brick_test(g: &MultiGraph, cut: &EdgeCut) -> Result<bool> {
    let cut = recut(g, cut)?;
    if !is_matching_covered(g) {
        return Err(Error::Precondition("graph is not matching covered".into()));
    }
    if cut.is_trivial() {
        return Err(Error::Precondition("cut is trivial".into()));
    }
    let (shrink_side, shrink_other) = cut_contractions(g, &cut)?;
    for (name, c) in [("G/X", &shrink_side), ("G/X̄", &shrink_other)] {
        if !is_matching_covered(c) {
            return Err(Error::Precondition(format!(
                "cut is not separating: {name} is not matching covered"
            )));
        }
        if !is_brick_elp(c) {
            return Err(Error::Precondition(format!("{name} is not a brick")));
        }
    }
    for &x in &cut.side {
        for y in g.vertices().filter(|y| !cut.side.contains(y)) {
            if covers_cut(g, &cut, x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For an extremal brick `g` and a cubic vertex `u`: true iff
/// `g - u - N(u)` has exactly one perfect matching, in which case `g⟨u⟩` is
/// again an extremal brick. That consequence is re-checked by counting and a
/// mismatch is reported as a verification failure.
pub fn extremal_insertion_check(g: &MultiGraph, u: VertexId) -> Result<bool> {
    let degree = g.degree(u)?;
    if degree != 3 {
        return Err(Error::WrongDegree {
            vertex: u,
            degree,
            expected: 3,
        });
    }
    if !is_brick_elp(g) || !is_extremal(g)? {
        return Err(Error::Precondition("graph is not an extremal brick".into()));
    }
    let mut gone = g.neighbors(u)?;
    gone.insert(u);
    let rest = g.delete_vertices(&gone)?;
    if count_perfect_matchings(&rest)? != 1 {
        return Ok(false);
    }
    let (inserted, _) = triangle_insert(g, u, None)?;
    let count = count_perfect_matchings(&inserted)?;
    if !is_brick_elp(&inserted) || count as i64 != dimension(&inserted) {
        return Err(Error::Verification(format!(
            "triangle insertion at {} gives {count} perfect matchings, dimension {}",
            g.display_name(u),
            dimension(&inserted)
        )));
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolidStatus {
    Solid,
    /// A nontrivial separating cut, given by one shore.
    NonSolid(BTreeSet<VertexId>),
    UnknownBeyondScale,
}

impl fmt::Display for SolidStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolidStatus::Solid => write!(f, "solid"),
            SolidStatus::NonSolid(side) => {
                let ids: Vec<String> = side.iter().map(|v| v.0.to_string()).collect();
                write!(f, "nonsolid {{{}}}", ids.join(","))
            }
            SolidStatus::UnknownBeyondScale => write!(f, "unknown-beyond-scale"),
        }
    }
}

/// Decides whether the brick `g` has a nontrivial separating cut. A
/// supplied witness shore is validated; otherwise graphs of at most
/// [`SOLID_SCAN_LIMIT`] vertices are scanned exhaustively.
pub fn solid_status(g: &MultiGraph, witness: Option<&BTreeSet<VertexId>>) -> Result<SolidStatus> {
    if let Some(side) = witness {
        let cut = g
            .edge_cut(side)
            .map_err(|e| Error::InvalidWitness(e.to_string()))?;
        if cut.is_trivial() {
            return Err(Error::InvalidWitness("cut is trivial".into()));
        }
        let (a, b) = cut_contractions(g, &cut)?;
        if !is_matching_covered(&a) {
            return Err(Error::InvalidWitness(
                "G/X (shore contracted) is not matching covered".into(),
            ));
        }
        if !is_matching_covered(&b) {
            return Err(Error::InvalidWitness(
                "G/X̄ (complement contracted) is not matching covered".into(),
            ));
        }
        return Ok(SolidStatus::NonSolid(side.clone()));
    }
    let n = g.vertex_count();
    if n > SOLID_SCAN_LIMIT {
        return Ok(SolidStatus::UnknownBeyondScale);
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    for rest in 0u32..(1 << n.saturating_sub(1)) {
        let mask = 1 | (rest << 1);
        let size = mask.count_ones() as usize;
        // Even shores make both contractions odd, hence not matching covered.
        if size < 3 || size > n - 3 || size.is_multiple_of(2) {
            continue;
        }
        let side: BTreeSet<VertexId> = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| ids[v])
            .collect();
        let cut = g.edge_cut(&side)?;
        if is_separating_cut(g, &cut)? {
            return Ok(SolidStatus::NonSolid(side));
        }
    }
    Ok(SolidStatus::Solid)
}

/// Outcome of the optional exhaustive tight-cut scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TightCutScan {
    NotRun,
    NoneFound,
    Found(BTreeSet<VertexId>),
}

#[derive(Clone, Debug, Default)]
pub enum SolidRequest {
    #[default]
    Skip,
    Exhaustive,
    Witness(BTreeSet<VertexId>),
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub tight_cuts: bool,
    pub solid: SolidRequest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub vertices: usize,
    pub edges: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_matching_covered: bool,
    pub is_three_connected: bool,
    pub is_brick: bool,
    /// `None` for bipartite graphs beyond the tight-cut scan limit.
    pub is_brace: Option<bool>,
    pub pm_count: u64,
    pub dimension: i64,
    pub is_extremal: bool,
    pub solid_status: Option<SolidStatus>,
    pub tight_cuts: TightCutScan,
}

pub const REPORT_CSV_HEADER: &str = "vertices,edges,is_connected,is_bipartite,is_matching_covered,is_three_connected,is_brick,is_brace,pm_count,dimension,is_extremal,solid_status,nontrivial_tight_cut";

impl AnalysisReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let brace = self
            .is_brace
            .map_or("unknown".to_string(), |b| b.to_string());
        let solid = self
            .solid_status
            .as_ref()
            .map_or("not-checked".to_string(), ToString::to_string);
        let tight = match &self.tight_cuts {
            TightCutScan::NotRun => "not-checked".to_string(),
            TightCutScan::NoneFound => "none".to_string(),
            TightCutScan::Found(side) => {
                let ids: Vec<String> = side.iter().map(|v| v.0.to_string()).collect();
                format!("{{{}}}", ids.join(","))
            }
        };
        vec![
            ("vertices", self.vertices.to_string()),
            ("edges", self.edges.to_string()),
            ("is_connected", self.is_connected.to_string()),
            ("is_bipartite", self.is_bipartite.to_string()),
            ("is_matching_covered", self.is_matching_covered.to_string()),
            ("is_three_connected", self.is_three_connected.to_string()),
            ("is_brick", self.is_brick.to_string()),
            ("is_brace", brace),
            ("pm_count", self.pm_count.to_string()),
            ("dimension", self.dimension.to_string()),
            ("is_extremal", self.is_extremal.to_string()),
            ("solid_status", solid),
            ("nontrivial_tight_cut", tight),
        ]
    }

    /// `key: value` lines.
    pub fn to_key_values(&self) -> String {
        self.fields()
            .into_iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    /// One CSV row matching [`REPORT_CSV_HEADER`].
    pub fn to_csv_row(&self) -> String {
        self.fields()
            .into_iter()
            .map(|(_, v)| {
                if v.contains(',') {
                    format!("\"{v}\"")
                } else {
                    v
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn analyze(g: &MultiGraph, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let n = g.vertex_count();
    let is_bipartite = g.is_bipartite();
    let is_brick = is_brick_elp(g);
    let is_brace = match (is_bipartite, n <= TIGHT_SCAN_LIMIT) {
        (false, _) => Some(false),
        (true, true) => Some(is_brace(g)?),
        (true, false) => None,
    };
    let pm_count = count_perfect_matchings(g)?;
    let dim = dimension(g);
    let tight_cuts = if options.tight_cuts {
        match find_nontrivial_tight_cut(g)? {
            Some(cut) => TightCutScan::Found(cut.side),
            None => TightCutScan::NoneFound,
        }
    } else {
        TightCutScan::NotRun
    };
    let solid = match &options.solid {
        SolidRequest::Skip => None,
        SolidRequest::Exhaustive => Some(solid_status(g, None)?),
        SolidRequest::Witness(w) => Some(solid_status(g, Some(w))?),
    };
    Ok(AnalysisReport {
        vertices: n,
        edges: g.edge_count(),
        is_connected: g.is_connected(),
        is_bipartite,
        is_matching_covered: is_matching_covered(g),
        is_three_connected: n > 3 && vertex_connectivity_at_least(g, 3)?,
        is_brick,
        is_brace,
        pm_count,
        dimension: dim,
        is_extremal: is_brick && pm_count as i64 == dim,
        solid_status: solid,
        tight_cuts,
    })
}
