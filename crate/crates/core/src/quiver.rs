//! Bipartite quivers, their variable pages and the concatenated matrices `A_γ`.
//!
//! All indices are 0-based in the API; the config grammar and the variable
//! names `x[i,j,k]` are 1-based.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::ops::Deref;

use crate::poly::{OrderSpec, VarId, VarNames};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("entry ({row},{col}) is outside A_{vertex} of shape {rows}x{cols}", vertex = vertex + 1)]
    OutOfBounds { vertex: usize, row: usize, col: usize, rows: usize, cols: usize },
}

/// Quiver data: arrows are `(source, target)` pairs of vertex indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    /// Rank bound per vertex; generators are `(rank+1)`-minors.
    pub ranks: Vec<usize>,
    pub order_file: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Sink,
    Source,
    Isolated,
}

impl QuiverSpec {
    /// Two vertices, `r` parallel arrows from vertex 1 (dimension `n`) to
    /// vertex 0 (dimension `m`), with minor sizes `u` on the sink and `v` on the source.
    pub fn double_determinantal(m: usize, n: usize, r: usize, u: usize, v: usize) -> Self {
        assert!(u >= 1 && v >= 1, "minor sizes are positive");
        QuiverSpec {
            vertices: 2,
            arrows: vec![(1, 0); r],
            dims: vec![m, n],
            ranks: vec![u - 1, v - 1],
            order_file: None,
        }
    }

    pub fn role(&self, v: usize) -> Role {
        if self.arrows.iter().any(|a| a.1 == v) {
            Role::Sink
        } else if self.arrows.iter().any(|a| a.0 == v) {
            Role::Source
        } else {
            Role::Isolated
        }
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertices).filter(|&v| self.role(v) == Role::Isolated).collect()
    }

    pub fn validate(&self) -> Result<(), QuiverError> {
        let d = self.vertices;
        if self.dims.len() != d || self.ranks.len() != d {
            return Err(QuiverError::Invalid(format!("dimension and rank vectors must have length {d}")));
        }
        for &(s, t) in &self.arrows {
            if s >= d || t >= d {
                return Err(QuiverError::Invalid(format!("arrow {} -> {} leaves the vertex range", s + 1, t + 1)));
            }
        }
        for v in 0..d {
            let is_sink = self.arrows.iter().any(|a| a.1 == v);
            let is_source = self.arrows.iter().any(|a| a.0 == v);
            if is_sink && is_source {
                return Err(QuiverError::Invalid(format!("vertex {} is both a source and a sink", v + 1)));
            }
        }
        Ok(())
    }

    /// Config text accepted by [`parse_quiver`].
    pub fn render(&self) -> String {
        let mut s = format!("vertices {}\n", self.vertices);
        for &(a, b) in &self.arrows {
            let _ = writeln!(s, "arrow {} {}", a + 1, b + 1);
        }
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "m {}", join(&self.dims));
        let _ = writeln!(s, "rank {}", join(&self.ranks));
        if let Some(f) = &self.order_file {
            let _ = writeln!(s, "order {f}");
        }
        s
    }
}

/// Parses the line-oriented quiver config.
pub fn parse_quiver(text: &str) -> Result<QuiverSpec, QuiverError> {
    let mut vertices: Option<usize> = None;
    let mut arrows = Vec::new();
    let mut dims: Option<Vec<usize>> = None;
    let mut ranks: Option<Vec<usize>> = None;
    let mut order_file = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| QuiverError::Syntax { line, message };
        let mut words = content.split_whitespace();
        let key = words.next().expect("nonempty line");
        let rest: Vec<&str> = words.collect();
        let ints = |what: &str| -> Result<Vec<usize>, QuiverError> {
            rest.iter().map(|w| w.parse::<usize>().map_err(|_| err(format!("{what}: `{w}` is not a nonnegative integer")))).collect()
        };
        if vertices.is_none() && key != "vertices" {
            return Err(err("the first directive must be `vertices <d>`".into()));
        }
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err("`vertices` given twice".into()));
                }
                let v = ints("vertices")?;
                if v.len() != 1 {
                    return Err(err("`vertices` takes one integer".into()));
                }
                vertices = Some(v[0]);
            }
            "arrow" => {
                let v = ints("arrow")?;
                if v.len() != 2 {
                    return Err(err("`arrow` takes a source and a target".into()));
                }
                let d = vertices.expect("checked above");
                for &x in &v {
                    if x == 0 || x > d {
                        return Err(err(format!("vertex {x} is out of range 1..{d}")));
                    }
                }
                let (s, t) = (v[0] - 1, v[1] - 1);
                let s_is_sink = s == t || arrows.iter().any(|a: &(usize, usize)| a.1 == s);
                let t_is_source = arrows.iter().any(|a: &(usize, usize)| a.0 == t);
                if s_is_sink || t_is_source {
                    let bad = if s_is_sink { s } else { t };
                    return Err(err(format!("vertex {} is both a source and a sink", bad + 1)));
                }
                arrows.push((s, t));
            }
            "m" | "rank" => {
                let v = ints(key)?;
                let d = vertices.expect("checked above");
                if v.len() != d {
                    return Err(err(format!("`{key}` needs {d} entries, found {}", v.len())));
                }
                if key == "m" {
                    dims = Some(v);
                } else {
                    ranks = Some(v);
                }
            }
            "order" => {
                if rest.len() != 1 {
                    return Err(err("`order` takes one file name".into()));
                }
                order_file = Some(rest[0].to_string());
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let missing = |what: &str| QuiverError::Syntax { line: last_line, message: format!("missing `{what}` line") };
    let spec = QuiverSpec {
        vertices: vertices.ok_or_else(|| missing("vertices"))?,
        arrows,
        dims: dims.ok_or_else(|| missing("m"))?,
        ranks: ranks.ok_or_else(|| missing("rank"))?,
        order_file,
    };
    spec.validate()?;
    Ok(spec)
}

/// Position `(i, j)` on page `k`, all 0-based; rendered `x[i+1,j+1,k+1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint {
    pub row: usize,
    pub col: usize,
    pub page: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Page {
    pub rows: usize,
    pub cols: usize,
    first: u32,
}

/// The grid of variables `A_γ` of one vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMatrix {
    pub role: Role,
    pub rows: usize,
    pub cols: usize,
    /// Pages in block order.
    pub blocks: Vec<usize>,
    entries: Vec<VarId>,
}

impl VertexMatrix {
    pub fn get(&self, p: usize, q: usize) -> Option<VarId> {
        (p < self.rows && q < self.cols).then(|| self.entries[p * self.cols + q])
    }
}

/// Where a variable sits in its sink matrix and in its source matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Placement {
    sink: (usize, usize, usize),
    source: (usize, usize, usize),
}

#[derive(Clone, Debug)]
pub struct Layout {
    spec: QuiverSpec,
    pages: Vec<Page>,
    points: Vec<LatticePoint>,
    placement: Vec<Placement>,
    matrices: Vec<VertexMatrix>,
}

impl Layout {
    pub fn new(spec: QuiverSpec) -> Result<Self, QuiverError> {
        spec.validate()?;
        let mut pages = Vec::with_capacity(spec.arrows.len());
        let mut points = Vec::new();
        for (k, &(s, t)) in spec.arrows.iter().enumerate() {
            let (rows, cols) = (spec.dims[t], spec.dims[s]);
            pages.push(Page { rows, cols, first: points.len() as u32 });
            for i in 0..rows {
                for j in 0..cols {
                    points.push(LatticePoint { row: i, col: j, page: k });
                }
            }
        }
        let mut placement = vec![Placement { sink: (0, 0, 0), source: (0, 0, 0) }; points.len()];
        let mut matrices = Vec::with_capacity(spec.vertices);
        for v in 0..spec.vertices {
            let role = spec.role(v);
            let blocks: Vec<usize> = match role {
                Role::Sink => (0..spec.arrows.len()).filter(|&k| spec.arrows[k].1 == v).collect(),
                Role::Source => (0..spec.arrows.len()).filter(|&k| spec.arrows[k].0 == v).collect(),
                Role::Isolated => Vec::new(),
            };
            let (rows, cols) = match role {
                Role::Sink => (spec.dims[v], blocks.iter().map(|&k| pages[k].cols).sum()),
                Role::Source => (blocks.iter().map(|&k| pages[k].rows).sum(), spec.dims[v]),
                Role::Isolated => (0, 0),
            };
            let mut entries = vec![VarId(0); rows * cols];
            let mut offset = 0;
            for &k in &blocks {
                let page = &pages[k];
                for i in 0..page.rows {
                    for j in 0..page.cols {
                        let var = VarId(page.first + (i * page.cols + j) as u32);
                        let (p, q) = if role == Role::Sink { (i, offset + j) } else { (offset + i, j) };
                        entries[p * cols + q] = var;
                        if role == Role::Sink {
                            placement[var.index()].sink = (v, p, q);
                        } else {
                            placement[var.index()].source = (v, p, q);
                        }
                    }
                }
                offset += if role == Role::Sink { page.cols } else { page.rows };
            }
            matrices.push(VertexMatrix { role, rows, cols, blocks, entries });
        }
        Ok(Layout { spec, pages, points, placement, matrices })
    }

    pub fn double_determinantal(m: usize, n: usize, r: usize, u: usize, v: usize) -> Self {
        Layout::new(QuiverSpec::double_determinantal(m, n, r, u, v)).expect("valid two-vertex quiver")
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    pub fn nvars(&self) -> usize {
        self.points.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.matrices.len()
    }

    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    pub fn matrix(&self, vertex: usize) -> &VertexMatrix {
        &self.matrices[vertex]
    }

    pub fn role(&self, vertex: usize) -> Role {
        self.matrices[vertex].role
    }

    pub fn point(&self, v: VarId) -> LatticePoint {
        self.points[v.index()]
    }

    pub fn var_at(&self, p: LatticePoint) -> Option<VarId> {
        let page = self.pages.get(p.page)?;
        (p.row < page.rows && p.col < page.cols).then(|| VarId(page.first + (p.row * page.cols + p.col) as u32))
    }

    /// The variable at 0-based position `(p, q)` of `A_vertex`.
    pub fn entry_at(&self, vertex: usize, p: usize, q: usize) -> Result<VarId, QuiverError> {
        let m = self.matrices.get(vertex).ok_or_else(|| QuiverError::Invalid(format!("no vertex {}", vertex + 1)))?;
        m.get(p, q).ok_or(QuiverError::OutOfBounds { vertex, row: p, col: q, rows: m.rows, cols: m.cols })
    }

    /// Position of a variable inside `A_vertex`, if it occurs there.
    pub fn position_in(&self, vertex: usize, v: VarId) -> Option<(usize, usize)> {
        let pl = self.placement.get(v.index())?;
        let role = self.matrices.get(vertex)?.role;
        match role {
            Role::Sink if pl.sink.0 == vertex => Some((pl.sink.1, pl.sink.2)),
            Role::Source if pl.source.0 == vertex => Some((pl.source.1, pl.source.2)),
            _ => None,
        }
    }

    pub fn var_name(&self, v: VarId) -> String {
        let p = self.point(v);
        format!("x[{},{},{}]", p.row + 1, p.col + 1, p.page + 1)
    }

    /// Resolves `x[i,j,k]` (1-based) to a variable.
    pub fn var_by_name(&self, name: &str) -> Option<VarId> {
        let inner = name.strip_prefix("x[")?.strip_suffix(']')?;
        let parts: Vec<usize> = inner.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
        if parts.len() != 3 || parts.contains(&0) {
            return None;
        }
        self.var_at(LatticePoint { row: parts[0] - 1, col: parts[1] - 1, page: parts[2] - 1 })
    }

    /// Page-major reading order: earlier pages outrank later ones.
    pub fn default_order(&self) -> OrderSpec {
        OrderSpec::identity(self.nvars())
    }

    /// Parses a ranking file with lines `x[i,j,k] <rank>`.
    pub fn parse_ranking(&self, text: &str) -> Result<OrderSpec, QuiverError> {
        let n = self.nvars();
        let mut rank = vec![u32::MAX; n];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| QuiverError::Syntax { line, message };
            let mut it = content.split_whitespace();
            let (Some(name), Some(r), None) = (it.next(), it.next(), it.next()) else {
                return Err(err("expected `x[i,j,k] <rank>`".into()));
            };
            let v = self.var_by_name(name).ok_or_else(|| err(format!("unknown variable `{name}`")))?;
            let r: u32 = r.parse().map_err(|_| err(format!("bad rank `{r}`")))?;
            if rank[v.index()] != u32::MAX {
                return Err(err(format!("`{name}` ranked twice")));
            }
            rank[v.index()] = r;
        }
        if let Some(v) = rank.iter().position(|&r| r == u32::MAX) {
            return Err(QuiverError::Invalid(format!("ranking omits {}", self.var_name(VarId(v as u32)))));
        }
        OrderSpec::from_ranks(rank).map_err(|_| QuiverError::Invalid("ranks must be a permutation of 0..n-1".into()))
    }

    pub fn render_ranking(&self, ord: &OrderSpec) -> String {
        let mut s = String::new();
        for v in 0..self.nvars() {
            let var = VarId(v as u32);
            let _ = writeln!(s, "{} {}", self.var_name(var), ord.ranks()[v]);
        }
        s
    }

    fn lines_of(&self, vertex: usize) -> impl Iterator<Item = Vec<VarId>> + '_ {
        let m = &self.matrices[vertex];
        let rows = (0..m.rows).map(move |p| (0..m.cols).map(|q| m.entries[p * m.cols + q]).collect());
        let cols = (0..m.cols).map(move |q| (0..m.rows).map(|p| m.entries[p * m.cols + q]).collect());
        rows.chain(cols)
    }
}

impl VarNames for Layout {
    fn var_name(&self, v: VarId) -> String {
        Layout::var_name(self, v)
    }
}

/// A pair of entries sharing a row or column of `A_vertex` whose ranks are
/// out of order: `first` lies left of or above `second` but does not outrank it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderViolation {
    pub vertex: usize,
    pub first: VarId,
    pub second: VarId,
}

/// Every out-of-order pair, each unordered variable pair reported once.
pub fn validate_consistent(ord: &OrderSpec, layout: &Layout) -> Vec<OrderViolation> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for vertex in 0..layout.vertex_count() {
        for line in layout.lines_of(vertex) {
            for a in 0..line.len() {
                for b in a + 1..line.len() {
                    let (x, y) = (line[a], line[b]);
                    let outranks = matches!((ord.rank(x), ord.rank(y)), (Ok(rx), Ok(ry)) if rx < ry);
                    if !outranks && seen.insert((x, y)) {
                        out.push(OrderViolation { vertex, first: x, second: y });
                    }
                }
            }
        }
    }
    out
}

/// An order that passed [`validate_consistent`] for a layout.
#[derive(Clone, Debug)]
pub struct ConsistentOrder(OrderSpec);

impl ConsistentOrder {
    pub fn new(ord: OrderSpec, layout: &Layout) -> Result<Self, Vec<OrderViolation>> {
        if ord.nvars() != layout.nvars() {
            return Err(Vec::new());
        }
        let v = validate_consistent(&ord, layout);
        if v.is_empty() {
            Ok(ConsistentOrder(ord))
        } else {
            Err(v)
        }
    }

    pub fn default_for(layout: &Layout) -> Self {
        ConsistentOrder(layout.default_order())
    }

    pub fn order(&self) -> &OrderSpec {
        &self.0
    }
}

impl Deref for ConsistentOrder {
    type Target = OrderSpec;
    fn deref(&self) -> &OrderSpec {
        &self.0
    }
}
