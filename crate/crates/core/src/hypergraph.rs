//! Hypergraphs and the deterministic constructors for the hyperpath, hyperstar,
//! hypercomb and attached-gadget families.
//!
//! Labels are canonical: spine vertices are numbered left to right starting at
//! zero, then pendant edges (teeth) or gadget copies are appended in spine
//! order. Vertex ids inside an edge are always ascending.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A finite hypergraph on the vertex set `0..n_vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n_vertices: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n_vertices, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n_vertices: h.n_vertices,
            edges: h.edges,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting the ids inside each edge.
    ///
    /// Edges keep the order in which they are given. Out-of-range ids and
    /// repeated ids inside one edge are rejected.
    pub fn new(n_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {i} contains vertex {v}, but there are only {n_vertices} vertices"
                )));
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {i} repeats a vertex"
                )));
            }
        }
        Ok(Hypergraph { n_vertices, edges })
    }

    /// The hypergraph with no vertices and no edges.
    pub fn empty() -> Self {
        Hypergraph {
            n_vertices: 0,
            edges: Vec::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Indices of the edges containing `v`.
    pub fn edges_containing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.binary_search(&v).is_ok())
            .map(|(i, _)| i)
    }

    /// Removes `v`; every edge through `v` loses that vertex. Edges that become
    /// empty are dropped. Remaining ids are compacted.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                e.iter()
                    .filter(|&&u| u != v)
                    .map(|&u| shift_down(u, v))
                    .collect::<Vec<_>>()
            })
            .filter(|e| !e.is_empty())
            .collect();
        Ok(Hypergraph {
            n_vertices: self.n_vertices - 1,
            edges,
        })
    }

    /// Removes `v` together with every edge through it. Remaining ids are
    /// compacted.
    pub fn delete_vertex_and_edges(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| e.iter().map(|&u| shift_down(u, v)).collect())
            .collect();
        Ok(Hypergraph {
            n_vertices: self.n_vertices - 1,
            edges,
        })
    }

    /// Removes `v`, every edge through it and every vertex of those edges.
    /// Remaining ids are compacted in order.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let mut gone = vec![false; self.n_vertices];
        gone[v] = true;
        for e in self.edges.iter().filter(|e| e.binary_search(&v).is_ok()) {
            for &u in e {
                gone[u] = true;
            }
        }
        let mut new_id = vec![usize::MAX; self.n_vertices];
        let mut next = 0;
        for (u, g) in gone.iter().enumerate() {
            if !g {
                new_id[u] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| {
                e.iter()
                    .filter(|&&u| !gone[u])
                    .map(|&u| new_id[u])
                    .collect::<Vec<_>>()
            })
            .filter(|e| !e.is_empty())
            .collect();
        Hypergraph::new(next, edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n_vertices {
            return Err(invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.n_vertices
            )));
        }
        Ok(())
    }
}

fn shift_down(u: usize, removed: usize) -> usize {
    if u > removed {
        u - 1
    } else {
        u
    }
}

/// A gadget hypergraph with a distinguished vertex, together with the edge
/// size of the spine it is attached along.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachedFamily {
    g: Hypergraph,
    distinguished: usize,
    ell: usize,
}

impl AttachedFamily {
    pub fn new(g: Hypergraph, distinguished: usize, ell: usize) -> Result<Self> {
        if distinguished >= g.n_vertices() {
            return Err(invalid(format!(
                "distinguished vertex {distinguished} out of range for {} vertices",
                g.n_vertices()
            )));
        }
        if ell < 3 {
            return Err(invalid(format!("ell must be at least 3, got {ell}")));
        }
        Ok(AttachedFamily {
            g,
            distinguished,
            ell,
        })
    }

    /// The family whose gadget is a single edge of size `ell`, attached at its
    /// first vertex. Its `H` members are the uniform hypercombs.
    pub fn single_edge(ell: usize) -> Result<Self> {
        let g = Hypergraph::new(ell, vec![(0..ell).collect()])?;
        AttachedFamily::new(g, 0, ell)
    }

    pub fn g(&self) -> &Hypergraph {
        &self.g
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn ell(&self) -> usize {
        self.ell
    }
}

/// The linear hyperpath with edge sizes `sizes`; the last vertex of each edge
/// is the first vertex of the next.
pub fn linear_hyperpath(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.is_empty() {
        return Err(invalid("a hyperpath needs at least one edge"));
    }
    check_sizes(sizes)?;
    Ok(path_unchecked(sizes))
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if let Some(&s) = sizes.iter().find(|&&s| s < 2) {
        return Err(invalid(format!("edge sizes must be at least 2, got {s}")));
    }
    Ok(())
}

fn path_unchecked(sizes: &[usize]) -> Hypergraph {
    let mut edges = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        edges.push((start..start + s).collect());
        start += s - 1;
    }
    let n_vertices = if sizes.is_empty() { 0 } else { start + 1 };
    Hypergraph { n_vertices, edges }
}

/// `P_{n,ell}`: the `ell`-uniform linear hyperpath with `n` edges. `n = 0`
/// gives the empty hypergraph.
pub fn uniform_hyperpath(n: usize, ell: usize) -> Result<Hypergraph> {
    if ell < 2 {
        return Err(invalid(format!("ell must be at least 2, got {ell}")));
    }
    Ok(path_unchecked(&vec![ell; n]))
}

/// `Q_{n,ell}`: `P_{n,ell}` with the first vertex of the first edge removed.
pub fn q_hyperpath(n: usize, ell: usize) -> Result<Hypergraph> {
    if n < 1 {
        return Err(invalid("Q_{n,ell} needs n >= 1"));
    }
    if ell < 3 {
        return Err(invalid(format!("ell must be at least 3, got {ell}")));
    }
    let mut sizes = vec![ell; n];
    sizes[0] = ell - 1;
    Ok(path_unchecked(&sizes))
}

/// The linear hyperstar: vertex 0 is the center, and edge `i` adds
/// `sizes[i] - 1` fresh vertices.
pub fn hyperstar(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.is_empty() {
        return Err(invalid("a hyperstar needs at least one edge"));
    }
    check_sizes(sizes)?;
    let mut next = 1;
    let mut edges = Vec::with_capacity(sizes.len());
    for &s in sizes {
        let mut e = vec![0];
        e.extend(next..next + s - 1);
        next += s - 1;
        edges.push(e);
    }
    Ok(Hypergraph {
        n_vertices: next,
        edges,
    })
}

/// Spine positions where gadgets (or teeth) are attached on `P_{n,ell}`:
/// the first vertex, every overlap vertex, and the last vertex.
fn attachment_points(n: usize, ell: usize) -> Vec<usize> {
    (0..=n).map(|i| i * (ell - 1)).collect()
}

/// Glues a copy of `g` onto `base` by identifying `distinguished` with
/// `at`; the remaining vertices of `g` become fresh ids in increasing order.
fn glue(base: &mut Hypergraph, g: &Hypergraph, distinguished: usize, at: usize) {
    let offset = base.n_vertices;
    let map = |u: usize| -> usize {
        match u.cmp(&distinguished) {
            std::cmp::Ordering::Equal => at,
            std::cmp::Ordering::Less => offset + u,
            std::cmp::Ordering::Greater => offset + u - 1,
        }
    };
    for e in &g.edges {
        let mut mapped: Vec<usize> = e.iter().map(|&u| map(u)).collect();
        mapped.sort_unstable();
        base.edges.push(mapped);
    }
    base.n_vertices += g.n_vertices - 1;
}

/// `C_{n,ell}`: the uniform linear hypercomb. For `n = 0` this is a single
/// edge of size `ell`.
pub fn hypercomb(n: usize, ell: usize) -> Result<Hypergraph> {
    if ell < 3 {
        return Err(invalid(format!("ell must be at least 3, got {ell}")));
    }
    let fam = AttachedFamily::single_edge(ell)?;
    attached_h(&fam, n)
}

/// `H_{n,ell}`: `P_{n,ell}` with a copy of the gadget glued at each
/// attachment point. `H_0` is the gadget itself.
pub fn attached_h(fam: &AttachedFamily, n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Ok(fam.g.clone());
    }
    let mut h = path_unchecked(&vec![fam.ell; n]);
    for at in attachment_points(n, fam.ell) {
        glue(&mut h, &fam.g, fam.distinguished, at);
    }
    Ok(h)
}

/// `D_{n,ell}`: `H_{n,ell}` without its first gadget copy and without the
/// spine vertex that copy was glued to. `D_0` is empty.
pub fn attached_d(fam: &AttachedFamily, n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Ok(Hypergraph::empty());
    }
    let mut sizes = vec![fam.ell; n];
    sizes[0] = fam.ell - 1;
    let mut h = path_unchecked(&sizes);
    // Attachment points of H shift down by one after deleting vertex 0.
    for at in attachment_points(n, fam.ell).into_iter().skip(1) {
        glue(&mut h, &fam.g, fam.distinguished, at - 1);
    }
    Ok(h)
}

/// A non-linear hypertree whose independent-set sequence
/// `(1,16,15,20,15,6,1)` is not unimodal: ten shared vertices `0..10` and six
/// private vertices `10..16`, one per edge.
pub fn roller_coaster() -> Hypergraph {
    let edges = (0..6)
        .map(|i| {
            let mut e: Vec<usize> = (0..10).collect();
            e.push(10 + i);
            e
        })
        .collect();
    Hypergraph {
        n_vertices: 16,
        edges,
    }
}

/// True iff any two distinct edges share at most one vertex.
pub fn is_linear(h: &Hypergraph) -> bool {
    let edges = h.edges();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if sorted_intersection_len(a, b) > 1 {
                return false;
            }
        }
    }
    true
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common
}
