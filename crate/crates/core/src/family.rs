//! Named graph families and the `family:param[:param]` spec grammar.
//!
//! Grammar (tokens separated by `:`):
//!
//! ```text
//! spec    := family | "corona" ":" spec
//!          | ("join" | "product" | "union") ":" spec ":" spec
//! family  := "path" ":" n | "cycle" ":" n | "complete" ":" n
//!          | "complete_bipartite" ":" m ":" n | "star" ":" n
//!          | "ladder" ":" n | "book" ":" n | "hypercube" ":" d
//!          | "friendship" ":" n
//! ```
//!
//! Every family has a fixed arity, so composites parse without brackets:
//! `join:complete:1:cycle:5` is `K_1 ∨ C_5`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops;

/// One of the named families with its parameters.
///
/// Vertex labels are fixed per family:
/// - path / cycle: `0..n` along the path or around the cycle;
/// - complete_bipartite `K_{m,n}`: left side `0..m`, right side `m..m+n`;
/// - star `K_{1,n}`: center `0`, leaves `1..=n`;
/// - ladder: rung `i`, side `s` is `2i + s`;
/// - book `K_{1,n} □ K_2`: `0` and `1` are the two centers, leaf `j` of
///   side `s` is `2j + s`;
/// - hypercube: a vertex's label is its coordinate bit-vector;
/// - friendship: `0` is the center, triangle `j` uses `2j - 1` and `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Ladder(usize),
    Book(usize),
    Hypercube(usize),
    Friendship(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Star(_) => "star",
            FamilySpec::Ladder(_) => "ladder",
            FamilySpec::Book(_) => "book",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::Friendship(_) => "friendship",
        }
    }

    /// Number of vertices the family graph has.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::Ladder(n) => 2 * n,
            FamilySpec::Book(n) => 2 * n + 2,
            FamilySpec::Hypercube(d) => 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
            FamilySpec::Friendship(n) => 2 * n + 1,
        }
    }

    /// Checks the parameter ranges each family is defined for.
    pub fn validate(&self) -> Result<()> {
        let (ok, rule) = match *self {
            FamilySpec::Path(n) => (n >= 1, "path needs n >= 1"),
            FamilySpec::Cycle(n) => (n >= 3, "cycle needs n >= 3"),
            FamilySpec::Complete(n) => (n >= 1, "complete needs n >= 1"),
            FamilySpec::CompleteBipartite(m, n) => {
                (m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1")
            }
            FamilySpec::Star(n) => (n >= 1, "star needs n >= 1"),
            FamilySpec::Ladder(n) => (n >= 1, "ladder needs n >= 1"),
            FamilySpec::Book(n) => (n >= 1, "book needs n >= 1"),
            FamilySpec::Hypercube(d) => (d >= 1, "hypercube needs d >= 1"),
            FamilySpec::Friendship(n) => (n >= 1, "friendship needs n >= 1"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::parse(self.to_string(), rule))
        }
    }

    fn arity(name: &str) -> Option<usize> {
        match name {
            "path" | "cycle" | "complete" | "star" | "ladder" | "book" | "hypercube"
            | "friendship" => Some(1),
            "complete_bipartite" => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(m, n) => write!(f, "complete_bipartite:{m}:{n}"),
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::Book(n)
            | FamilySpec::Hypercube(n)
            | FamilySpec::Friendship(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

/// Builds the named family graph with its documented labeling.
pub fn make_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    if spec.order() > crate::graph::MAX_VERTICES {
        return Err(Error::Input(format!(
            "{spec} has {} vertices, limit is {}",
            spec.order(),
            crate::graph::MAX_VERTICES
        )));
    }
    match spec {
        FamilySpec::Path(n) => Graph::new(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()),
        FamilySpec::Cycle(n) => {
            Graph::new(n, &(0..n).map(|v| (v, (v + 1) % n)).collect::<Vec<_>>())
        }
        FamilySpec::Complete(n) => {
            let adj = (0..n)
                .map(|v| VertexSet::full(n) - VertexSet::singleton(v))
                .collect();
            Ok(Graph::from_adjacency(adj))
        }
        FamilySpec::CompleteBipartite(m, n) => {
            let edges: Vec<_> = (0..m)
                .flat_map(|u| (0..n).map(move |w| (u, m + w)))
                .collect();
            Graph::new(m + n, &edges)
        }
        FamilySpec::Star(n) => Graph::new(n + 1, &(1..=n).map(|v| (0, v)).collect::<Vec<_>>()),
        FamilySpec::Ladder(n) => ops::cartesian_product(
            &make_family(FamilySpec::Path(n))?,
            &make_family(FamilySpec::Complete(2))?,
        ),
        FamilySpec::Book(n) => ops::cartesian_product(
            &make_family(FamilySpec::Star(n))?,
            &make_family(FamilySpec::Complete(2))?,
        ),
        FamilySpec::Hypercube(d) => {
            let order = 1usize << d;
            let edges: Vec<_> = (0..order)
                .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
                .filter(|&(u, v)| u < v)
                .collect();
            Graph::new(order, &edges)
        }
        FamilySpec::Friendship(n) => {
            let edges: Vec<_> = (1..=n)
                .flat_map(|j| [(0, 2 * j - 1), (0, 2 * j), (2 * j - 1, 2 * j)])
                .collect();
            Graph::new(2 * n + 1, &edges)
        }
    }
}

/// A family graph or a composite construction over family graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Family(FamilySpec),
    Corona(Box<GraphSpec>),
    Join(Box<GraphSpec>, Box<GraphSpec>),
    Product(Box<GraphSpec>, Box<GraphSpec>),
    Union(Box<GraphSpec>, Box<GraphSpec>),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f) => make_family(*f),
            GraphSpec::Corona(g) => ops::corona_k1(&g.build()?),
            GraphSpec::Join(a, b) => ops::join(&a.build()?, &b.build()?),
            GraphSpec::Product(a, b) => ops::cartesian_product(&a.build()?, &b.build()?),
            GraphSpec::Union(a, b) => ops::disjoint_union(&a.build()?, &b.build()?),
        }
    }
}

impl From<FamilySpec> for GraphSpec {
    fn from(f: FamilySpec) -> Self {
        GraphSpec::Family(f)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(fam) => write!(f, "{fam}"),
            GraphSpec::Corona(g) => write!(f, "corona:{g}"),
            GraphSpec::Join(a, b) => write!(f, "join:{a}:{b}"),
            GraphSpec::Product(a, b) => write!(f, "product:{a}:{b}"),
            GraphSpec::Union(a, b) => write!(f, "union:{a}:{b}"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_graph_spec(text)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match parse_graph_spec(text)? {
            GraphSpec::Family(f) => Ok(f),
            _ => Err(Error::parse(
                text,
                "expected a plain family, not a composite",
            )),
        }
    }
}

/// Parses a family spec such as `cycle:9` or a composite such as
/// `corona:path:4`.
pub fn parse_graph_spec(text: &str) -> Result<GraphSpec> {
    let tokens: Vec<&str> = text.trim().split(':').collect();
    let mut pos = 0;
    let spec = parse_tokens(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::parse(tokens[pos], "unexpected trailing token"));
    }
    Ok(spec)
}

fn parse_tokens(tokens: &[&str], pos: &mut usize) -> Result<GraphSpec> {
    let name = *tokens
        .get(*pos)
        .ok_or_else(|| Error::parse(tokens.join(":"), "missing family name"))?;
    *pos += 1;
    match name {
        "corona" => Ok(GraphSpec::Corona(Box::new(parse_tokens(tokens, pos)?))),
        "join" | "product" | "union" => {
            let a = Box::new(parse_tokens(tokens, pos)?);
            let b = Box::new(parse_tokens(tokens, pos)?);
            Ok(match name {
                "join" => GraphSpec::Join(a, b),
                "product" => GraphSpec::Product(a, b),
                _ => GraphSpec::Union(a, b),
            })
        }
        _ => {
            let arity =
                FamilySpec::arity(name).ok_or_else(|| Error::parse(name, "unknown family name"))?;
            let mut params = Vec::with_capacity(arity);
            for _ in 0..arity {
                let tok = *tokens.get(*pos).ok_or_else(|| {
                    Error::parse(name, format!("{name} takes {arity} parameter(s)"))
                })?;
                let value: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(tok, "parameter is not a natural number"))?;
                params.push(value);
                *pos += 1;
            }
            let spec = match (name, params.as_slice()) {
                ("path", &[n]) => FamilySpec::Path(n),
                ("cycle", &[n]) => FamilySpec::Cycle(n),
                ("complete", &[n]) => FamilySpec::Complete(n),
                ("complete_bipartite", &[m, n]) => FamilySpec::CompleteBipartite(m, n),
                ("star", &[n]) => FamilySpec::Star(n),
                ("ladder", &[n]) => FamilySpec::Ladder(n),
                ("book", &[n]) => FamilySpec::Book(n),
                ("hypercube", &[d]) => FamilySpec::Hypercube(d),
                ("friendship", &[n]) => FamilySpec::Friendship(n),
                _ => unreachable!("arity table and constructor table disagree"),
            };
            spec.validate()?;
            Ok(GraphSpec::Family(spec))
        }
    }
}
