use itertools::Itertools;

use crate::error::{Error, Result};

use super::OrderedTree;

/// Compositions of `total` into exactly `parts` positive integers, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for first in 1..=total - (parts - 1) {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Every ordered tree with `n` vertices, each exactly once.
///
/// The order is canonical: root degree ascending, then compositions of
/// `n - 1` among the children in lexicographic order, then the child subtrees
/// in the same order recursively (leftmost child varying slowest).
pub fn enumerate_ordered(n: usize) -> Result<Vec<OrderedTree>> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let mut by_size: Vec<Vec<OrderedTree>> = vec![Vec::new(), vec![OrderedTree::leaf()]];
    for size in 2..=n {
        let mut trees = Vec::new();
        for degree in 1..size {
            for comp in compositions(size - 1, degree) {
                let choices = comp.iter().map(|&k| by_size[k].iter());
                for kids in choices.multi_cartesian_product() {
                    trees.push(OrderedTree::with_children(
                        kids.into_iter().cloned().collect(),
                    ));
                }
            }
        }
        by_size.push(trees);
    }
    Ok(by_size.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn catalan(k: usize) -> u64 {
        let mut c = vec![1u64; k + 1];
        for j in 1..=k {
            c[j] = (0..j).map(|i| c[i] * c[j - 1 - i]).sum();
        }
        c[k]
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(enumerate_ordered(0), Err(Error::EmptyTree));
    }

    #[test]
    fn lexicographic_compositions() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(4, 1), vec![vec![4]]);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(compositions(2, 3).is_empty());
        // C(k-1, d-1) of them
        assert_eq!(compositions(7, 3).len(), 15);
    }

    #[test]
    fn four_vertex_trees_in_canonical_order() {
        let got: Vec<String> = enumerate_ordered(4)
            .unwrap()
            .iter()
            .map(OrderedTree::to_paren)
            .collect();
        assert_eq!(
            got,
            ["(((())))", "((()()))", "(()(()))", "((())())", "(()()())"]
        );
    }

    #[test]
    fn counts_are_catalan() {
        assert_eq!(enumerate_ordered(1).unwrap().len(), 1);
        assert_eq!(catalan(9), 4862);
        for n in 1..=12 {
            assert_eq!(
                enumerate_ordered(n).unwrap().len() as u64,
                catalan(n - 1),
                "n = {n}"
            );
        }
    }

    #[test]
    fn trees_are_distinct_and_sized() {
        for n in 1..=10 {
            let trees = enumerate_ordered(n).unwrap();
            let distinct: HashSet<String> = trees.iter().map(OrderedTree::to_paren).collect();
            assert_eq!(distinct.len(), trees.len());
            assert!(trees.iter().all(|t| t.size() == n));
        }
    }
}
