//! Krull dimension of monomial quotients via minimum vertex covers of the
//! support hypergraph.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideals::IdealGens;

/// Smallest set of vertices meeting every edge. Edges are variable-id sets;
/// an empty edge cannot be covered and yields `None`.
pub fn minimum_vertex_cover(edges: &[Vec<usize>], nvars: usize) -> Result<Option<Vec<usize>>> {
    if nvars > 128 {
        return Err(AlgebraError::Parameter(format!("vertex cover limited to 128 variables, got {nvars}")));
    }
    let mut masks: Vec<u128> = edges.iter().map(|e| e.iter().fold(0u128, |m, &v| m | (1 << v))).collect();
    if masks.iter().any(|&m| m == 0) {
        return Ok(None);
    }
    // only inclusion-minimal edges matter
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&s| s & m == s) {
            minimal.push(m);
        }
    }
    let mut best = u128::MAX;
    let mut best_size = u32::MAX;
    search(&minimal, 0, &mut best, &mut best_size);
    Ok(Some((0..nvars).filter(|&v| best & (1 << v) != 0).collect()))
}

fn search(edges: &[u128], chosen: u128, best: &mut u128, best_size: &mut u32) {
    let size = chosen.count_ones();
    if size >= *best_size {
        return;
    }
    // first uncovered edge, preferring the smallest
    let Some(edge) = edges.iter().filter(|&&e| e & chosen == 0).min_by_key(|e| e.count_ones()) else {
        *best = chosen;
        *best_size = size;
        return;
    };
    if size + 1 >= *best_size {
        return;
    }
    let mut rest = *edge;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        search(edges, chosen | (1 << v), best, best_size);
    }
}

/// Height of a monomial ideal: the size of a minimum vertex cover of the
/// supports of its generators.
pub fn monomial_height<F: Field>(ideal: &IdealGens<F>) -> Result<usize> {
    if !ideal.is_monomial() {
        return Err(AlgebraError::Parameter(format!("{} is not a monomial ideal", ideal.label)));
    }
    let nvars = ideal.ring.num_vars();
    let edges: Vec<Vec<usize>> =
        ideal.gens.iter().filter(|g| !g.is_zero()).map(|g| g.terms()[0].0.support().collect()).collect();
    if edges.is_empty() {
        return Ok(0);
    }
    match minimum_vertex_cover(&edges, nvars)? {
        Some(c) => Ok(c.len()),
        None => Err(AlgebraError::Parameter("unit ideal has no height".into())),
    }
}

/// Krull dimension of `S / M` for a monomial ideal `M`.
pub fn monomial_dimension<F: Field>(ideal: &IdealGens<F>) -> Result<usize> {
    Ok(ideal.ring.num_vars() - monomial_height(ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_of_path_and_triangle() {
        let path = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        assert_eq!(minimum_vertex_cover(&path, 4).unwrap().unwrap().len(), 2);
        let tri = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(minimum_vertex_cover(&tri, 3).unwrap().unwrap().len(), 2);
        assert_eq!(minimum_vertex_cover(&[vec![]], 3).unwrap(), None);
    }

    #[test]
    fn dimension_of_coordinate_ideal() {
        use crate::field::Rationals;
        use crate::poly::Polynomial;
        use crate::ring::Ring;
        let ring = Ring::symplectic(Rationals, 1, 2).unwrap();
        let gens = ["y[1,1]*y[2,2]", "y[1,2]"].iter().map(|s| Polynomial::parse(&ring, s).unwrap()).collect();
        let m = IdealGens::new("M", &ring, gens);
        assert_eq!(monomial_height(&m).unwrap(), 2);
        assert_eq!(monomial_dimension(&m).unwrap(), 2);
    }
}
