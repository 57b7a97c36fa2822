//! Graph operations: corona with `K_1`, join, Cartesian product and
//! disjoint union.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn check_order(n: usize, what: &str) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Input(format!(
            "{what} would have {n} vertices, limit is {MAX_VERTICES}"
        )))
    } else {
        Ok(())
    }
}

fn nonempty(g: &Graph, what: &str) -> Result<()> {
    if g.order() == 0 {
        Err(Error::Input(format!("{what} needs a nonempty graph")))
    } else {
        Ok(())
    }
}

/// `G ∘ K_1`: vertex `i` keeps its label and gains the pendant partner
/// `n + i`.
pub fn corona_k1(g: &Graph) -> Result<Graph> {
    nonempty(g, "corona")?;
    let n = g.order();
    check_order(2 * n, "corona")?;
    let mut edges = g.edges();
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::new(2 * n, &edges)
}

/// `G ∨ H`: disjoint union plus every edge between the two sides. `h`'s
/// vertices are shifted by `g.order()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    nonempty(g, "join")?;
    nonempty(h, "join")?;
    let (a, b) = (g.order(), h.order());
    check_order(a + b, "join")?;
    let mut adj = Vec::with_capacity(a + b);
    let right = VertexSet::from_bits(VertexSet::full(b).bits() << a);
    for v in 0..a {
        adj.push(g.neighbors(v) | right);
    }
    for v in 0..b {
        adj.push(VertexSet::from_bits(h.neighbors(v).bits() << a) | VertexSet::full(a));
    }
    Ok(Graph::from_adjacency(adj))
}

/// `G □ H`: vertex `(a, b)` gets label `a * h.order() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    nonempty(g, "cartesian product")?;
    nonempty(h, "cartesian product")?;
    let (gn, hn) = (g.order(), h.order());
    check_order(gn * hn, "cartesian product")?;
    let mut edges = Vec::new();
    for a in 0..gn {
        for (u, v) in h.edges() {
            edges.push((a * hn + u, a * hn + v));
        }
    }
    for b in 0..hn {
        for (u, v) in g.edges() {
            edges.push((u * hn + b, v * hn + b));
        }
    }
    Graph::new(gn * hn, &edges)
}

/// `G + H` with `h` shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let a = g.order();
    check_order(a + h.order(), "disjoint union")?;
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + a, v + a)));
    Graph::new(a + h.order(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    fn p(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn corona_of_k2_is_p4() {
        let c = corona_k1(&k(2)).unwrap();
        // 2 - 0 - 1 - 3
        assert_eq!(c.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(corona_k1(&k(1)).unwrap(), k(2));
    }

    #[test]
    fn corona_of_p3() {
        let c = corona_k1(&p(3)).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.degrees().iter().filter(|&&d| d == 1).count(), 3);
    }

    #[test]
    fn joins() {
        assert_eq!(join(&k(1), &k(1)).unwrap(), k(2));
        assert_eq!(join(&k(2), &k(2)).unwrap(), k(4));
        assert!(join(&Graph::empty(0).unwrap(), &k(1)).is_err());
    }

    #[test]
    fn products() {
        let c4 = cartesian_product(&p(2), &k(2)).unwrap();
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert_eq!(c4.edge_count(), 4);
        let l3 = cartesian_product(&p(3), &k(2)).unwrap();
        assert_eq!((l3.order(), l3.edge_count()), (6, 7));
        assert!(cartesian_product(&k(8), &k(8)).is_err());
    }

    #[test]
    fn union_shifts_labels() {
        let u = disjoint_union(&k(2), &k(2)).unwrap();
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn corona_of_empty_is_an_error() {
        assert!(corona_k1(&Graph::empty(0).unwrap()).is_err());
    }
}
