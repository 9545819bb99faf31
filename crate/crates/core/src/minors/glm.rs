use serde::{Deserialize, Serialize};

use crate::error::{input, Defect, Error, Result};
use crate::families;
use crate::graph::{cartesian_with_k2, is_connected_subset, Graph, VertexSet};
use crate::model::{clique_model, validate_model, Model};

/// Paths in a host graph whose intersection graph is bipartite and contains
/// a `K_t` minor. `kt_model[i]` holds the indices of the paths in branch `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLikeMinorCert {
    pub paths: Vec<VertexSet>,
    pub bipartition: Vec<u8>,
    pub kt_model: Vec<VertexSet>,
}

impl GridLikeMinorCert {
    /// Paths adjacent iff they share a host vertex.
    pub fn intersection_graph(&self) -> Result<Graph> {
        let p = &self.paths;
        let edges = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i].intersects(&p[j]));
        Graph::new(p.len(), edges)
    }
}

fn induces_path(g: &Graph, p: &VertexSet) -> Result<bool> {
    if !is_connected_subset(g, p)? {
        return Ok(false);
    }
    let h = g.induced(p)?;
    Ok(h.m() + 1 == h.n() && (0..h.n()).all(|v| h.degree(v) <= 2))
}

/// Checks the certificate and returns its order `t`.
pub fn validate_glm(g: &Graph, cert: &GridLikeMinorCert) -> Result<usize> {
    if cert.paths.is_empty() {
        return input("grid-like minor with no paths");
    }
    if cert.bipartition.len() != cert.paths.len() {
        return input("bipartition must give one side per path");
    }
    if cert.bipartition.iter().any(|&s| s > 1) {
        return input("bipartition sides must be 0 or 1");
    }
    for (i, p) in cert.paths.iter().enumerate() {
        g.check_set(p)?;
        if p.is_empty() {
            return Err(Defect::EmptyElement(i).into());
        }
        if !induces_path(g, p)? {
            return Err(Defect::NotAPath(i).into());
        }
    }
    let h = cert.intersection_graph()?;
    if let Some(&(i, j)) = h.edges().iter().find(|&&(i, j)| cert.bipartition[i] == cert.bipartition[j]) {
        return Err(Defect::NotBipartite(i, j).into());
    }
    if cert.kt_model.is_empty() {
        return Err(Error::Invalid(Defect::Other("empty K_t model".into())));
    }
    validate_model(&clique_model(&h, cert.kt_model.clone())?)??;
    Ok(cert.kt_model.len())
}

/// The `k × k` grid with its rows and columns as a grid-like minor of order
/// `k + 1`. Rows are paths `0..k` on side 0, columns are paths `k..2k` on
/// side 1. Branch `i < k - 1` is `{row i, column i}`; the last two branches
/// are `{row k-1}` and `{column k-1}`.
pub fn glm_from_grid(k: usize) -> Result<(Graph, GridLikeMinorCert)> {
    if k < 2 {
        return input("glm_from_grid needs k >= 2");
    }
    let g = families::grid(k, k)?;
    let rows = (0..k).map(|r| (r * k..(r + 1) * k).collect());
    let cols = (0..k).map(|c| (0..k).map(|r| r * k + c).collect());
    let paths: Vec<VertexSet> = rows.chain(cols).collect();
    let bipartition = (0..2 * k).map(|i| u8::from(i >= k)).collect();
    let mut kt_model: Vec<VertexSet> = (0..k - 1).map(|i| VertexSet::from([i, k + i])).collect();
    kt_model.push([k - 1].into());
    kt_model.push([2 * k - 1].into());
    Ok((g, GridLikeMinorCert { paths, bipartition, kt_model }))
}

/// A `K_t` model in `g □ K_2`: each path is lifted to the copy named by its
/// side, and each branch set is the union of its lifted paths.
pub fn model_in_product_from_glm(g: &Graph, cert: &GridLikeMinorCert) -> Result<Model> {
    let t = validate_glm(g, cert)?;
    let n = g.n();
    let branches = cert
        .kt_model
        .iter()
        .map(|b| {
            b.iter()
                .flat_map(|p| {
                    let shift = usize::from(cert.bipartition[p]) * n;
                    cert.paths[p].iter().map(move |v| v + shift)
                })
                .collect()
        })
        .collect();
    Ok(Model { host: cartesian_with_k2(g), pattern: Graph::complete(t)?, branches })
}
