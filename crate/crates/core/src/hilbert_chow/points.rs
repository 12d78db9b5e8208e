use crate::error::{Error, Result};
use crate::linalg::{dense_to_sparse, Echelon};
use crate::poly::ProjectivePoint;

/// A 0-cycle in `P(W)`: points listed with repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim_w: usize,
    points: Vec<ProjectivePoint>,
}

impl PointConfiguration {
    pub fn new(dim_w: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        if dim_w < 2 {
            return Err(Error::Precondition(
                "ambient space must have dimension at least 2".into(),
            ));
        }
        if points.is_empty() {
            return Err(Error::Precondition("configuration has no points".into()));
        }
        for p in &points {
            crate::error::check_dim(dim_w, p.dim())?;
        }
        Ok(PointConfiguration { dim_w, points })
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// Number of points counted with multiplicity.
    pub fn length(&self) -> usize {
        self.points.len()
    }

    /// Distinct points as (first index, all indices).
    pub fn support(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            match groups.iter_mut().find(|g| self.points[g[0]] == *p) {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
        }
        groups
    }

    pub fn is_reduced(&self) -> bool {
        self.support().len() == self.points.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityVerdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl StabilityVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            StabilityVerdict::Stable => "stable",
            StabilityVerdict::StrictlySemistable => "strictly-semistable",
            StabilityVerdict::Unstable => "unstable",
        }
    }
}

/// A proper subspace `Z` attaining the largest value of
/// `#(Y ∩ Z) / d - dim Z / dim W` (vector-space dimension of `Z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Indices of the points spanning `Z`.
    pub spanning: Vec<usize>,
    /// Indices of all points lying in `Z`, with multiplicity.
    pub contained: Vec<usize>,
    /// Vector-space dimension of `Z`.
    pub span_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointStability {
    pub verdict: StabilityVerdict,
    pub witness: Witness,
    /// `#(Y ∩ Z) * dim W - dim Z * d` for the witness; the sign decides.
    pub excess: i64,
}

/// Chow stability of a 0-cycle in `P(W)`.
///
/// Stable iff `#(Y ∩ Z) / d < dim Z / dim W` for all nonzero proper
/// subspaces `Z`, semistable iff the weak inequality holds. For a given
/// dimension the count is largest on spans of configuration points, so
/// only spans of linearly independent subsets of the support are tried.
/// Points are counted with multiplicity.
pub fn chow_points_stability(cfg: &PointConfiguration) -> PointStability {
    let support = cfg.support();
    let d = cfg.length() as i64;
    let dim_w = cfg.dim_w as i64;
    let mut best: Option<(i64, Witness)> = None;
    let mut chosen: Vec<usize> = Vec::new();
    visit(
        cfg,
        &support,
        0,
        &mut chosen,
        &mut Echelon::new(),
        &mut |span, idx| {
            let contained: Vec<usize> = {
                let mut v: Vec<usize> = support
                    .iter()
                    .filter(|g| span.contains(dense_to_sparse(cfg.points[g[0]].coords())))
                    .flat_map(|g| g.iter().copied())
                    .collect();
                v.sort();
                v
            };
            let excess = contained.len() as i64 * dim_w - idx.len() as i64 * d;
            let better = match &best {
                None => true,
                Some((e, w)) => excess > *e || (excess == *e && contained < w.contained),
            };
            if better {
                let spanning = idx.iter().map(|&g| support[g][0]).collect();
                best = Some((
                    excess,
                    Witness {
                        spanning,
                        contained,
                        span_dim: idx.len(),
                    },
                ));
            }
        },
    );
    let (excess, witness) = best.expect("at least one point");
    let verdict = match excess {
        e if e < 0 => StabilityVerdict::Stable,
        0 => StabilityVerdict::StrictlySemistable,
        _ => StabilityVerdict::Unstable,
    };
    PointStability {
        verdict,
        witness,
        excess,
    }
}

/// Depth-first enumeration of independent subsets of the support with at
/// most `dim W - 1` elements, in lexicographic order.
fn visit(
    cfg: &PointConfiguration,
    support: &[Vec<usize>],
    from: usize,
    chosen: &mut Vec<usize>,
    span: &mut Echelon,
    f: &mut dyn FnMut(&Echelon, &[usize]),
) {
    if chosen.len() + 1 >= cfg.dim_w {
        return;
    }
    for g in from..support.len() {
        let row = dense_to_sparse(cfg.points[support[g][0]].coords());
        if span.contains(row.clone()) {
            continue;
        }
        let mut next = span.clone();
        next.insert(row);
        chosen.push(g);
        f(&next, chosen);
        visit(cfg, support, g + 1, chosen, &mut next, f);
        chosen.pop();
    }
}
