//! Increasing ordered trees and a sign-reversing involution on them.
//!
//! Vertices are identified by their labels `1..=n`; the root is always 1.
//! A tree is *proper* when the root has `n - 1` leaf children with labels
//! increasing left to right. On every other tree the involution moves the
//! first illegal leaf (in preorder) and flips the sign `prod_v (-1)^(h_v)`,
//! so the signed count of all increasing trees on `n` vertices is `-1`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rational};
use crate::trees::{enumerate_ordered, OrderedTree};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTree {
    /// `children[l - 1]` lists the children of label `l`, left to right.
    children: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IllegalCase {
    /// The leaf exceeds every label under its next sibling `w`, and the
    /// subtree at `w` is proper.
    NextSiblingProper,
    /// The leaf is the rightmost child of its parent `u`, and the subtree at
    /// `u` is proper.
    RightmostOfProper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IllegalLeafFinding {
    pub leaf: u32,
    pub parent: u32,
    /// Present only for [`IllegalCase::NextSiblingProper`].
    pub next_sibling: Option<u32>,
    pub case: IllegalCase,
}

impl IncreasingTree {
    /// Labels `shape` with `labels`, given in preorder.
    pub fn new(shape: &OrderedTree, labels: &[u32]) -> Result<Self> {
        let n = shape.size();
        if labels.len() != n {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {n} vertices",
                labels.len()
            )));
        }
        let mut seen = vec![false; n];
        for &l in labels {
            if l == 0 || l as usize > n || std::mem::replace(&mut seen[l as usize - 1], true) {
                return Err(Error::InvalidLabeling(format!(
                    "labels are not a permutation of 1..={n}"
                )));
            }
        }
        let mut children = vec![Vec::new(); n];
        let mut next = 0;
        fn walk(
            t: &OrderedTree,
            labels: &[u32],
            next: &mut usize,
            children: &mut [Vec<u32>],
        ) -> Result<u32> {
            let me = labels[*next];
            *next += 1;
            for c in t.children() {
                let child = walk(c, labels, next, children)?;
                if child <= me {
                    return Err(Error::InvalidLabeling(format!("child {child} under {me}")));
                }
                children[me as usize - 1].push(child);
            }
            Ok(me)
        }
        walk(shape, labels, &mut next, &mut children)?;
        Ok(IncreasingTree { children })
    }

    /// The unique proper tree: root 1 with children `2, 3, ..., n`.
    pub fn proper(n: usize) -> Self {
        assert!(n >= 1, "a tree needs at least one vertex");
        let mut children = vec![Vec::new(); n];
        children[0] = (2..=n as u32).collect();
        IncreasingTree { children }
    }

    pub fn size(&self) -> usize {
        self.children.len()
    }

    pub fn children_of(&self, label: u32) -> &[u32] {
        &self.children[label as usize - 1]
    }

    pub fn parent_of(&self, label: u32) -> Option<u32> {
        self.children
            .iter()
            .position(|kids| kids.contains(&label))
            .map(|i| i as u32 + 1)
    }

    pub fn is_leaf(&self, label: u32) -> bool {
        self.children_of(label).is_empty()
    }

    /// Labels in preorder.
    pub fn preorder(&self) -> Vec<u32> {
        self.preorder_from(1)
    }

    fn preorder_from(&self, root: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(self.children_of(v).iter().rev());
        }
        out
    }

    pub fn shape(&self) -> OrderedTree {
        fn build(t: &IncreasingTree, v: u32) -> OrderedTree {
            OrderedTree::with_children(t.children_of(v).iter().map(|&c| build(t, c)).collect())
        }
        build(self, 1)
    }

    fn subtree_size(&self, root: u32) -> usize {
        1 + self
            .children_of(root)
            .iter()
            .map(|&c| self.subtree_size(c))
            .sum::<usize>()
    }

    fn subtree_max(&self, root: u32) -> u32 {
        self.children_of(root)
            .iter()
            .map(|&c| self.subtree_max(c))
            .fold(root, u32::max)
    }

    /// `prod_v (-1)^(h_v)` as `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let total: usize = (1..=self.size() as u32).map(|v| self.subtree_size(v)).sum();
        if total.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Whether the subtree rooted at `root` is proper, judged on its own
    /// labels: every child of `root` is a leaf and the child labels
    /// increase left to right.
    pub fn is_proper_at(&self, root: u32) -> bool {
        let kids = self.children_of(root);
        kids.iter().all(|&c| self.is_leaf(c)) && kids.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_proper(&self) -> bool {
        self.is_proper_at(1)
    }

    /// The first illegal leaf in preorder; `None` exactly for the proper tree.
    pub fn find_first_illegal_leaf(&self) -> Option<IllegalLeafFinding> {
        if self.is_proper() {
            return None;
        }
        self.preorder()
            .into_iter()
            .find_map(|v| self.illegal_leaf(v))
    }

    fn illegal_leaf(&self, v: u32) -> Option<IllegalLeafFinding> {
        if !self.is_leaf(v) {
            return None;
        }
        let u = self.parent_of(v)?;
        let siblings = self.children_of(u);
        let i = siblings
            .iter()
            .position(|&c| c == v)
            .expect("v is a child of u");
        match siblings.get(i + 1) {
            Some(&w) if self.is_proper_at(w) && v > self.subtree_max(w) => {
                Some(IllegalLeafFinding {
                    leaf: v,
                    parent: u,
                    next_sibling: Some(w),
                    case: IllegalCase::NextSiblingProper,
                })
            }
            None if self.is_proper_at(u) => Some(IllegalLeafFinding {
                leaf: v,
                parent: u,
                next_sibling: None,
                case: IllegalCase::RightmostOfProper,
            }),
            _ => None,
        }
    }

    /// Applies the involution; proper trees are fixed.
    ///
    /// In the first case the leaf `v` moves from `u` to become the rightmost
    /// child of its next sibling `w`. In the second it moves up to sit
    /// immediately left of `u` among the children of `u`'s parent.
    pub fn involute(&self) -> IncreasingTree {
        let Some(f) = self.find_first_illegal_leaf() else {
            return self.clone();
        };
        let mut out = self.clone();
        let (v, u) = (f.leaf, f.parent);
        out.children[u as usize - 1].retain(|&c| c != v);
        match f.case {
            IllegalCase::NextSiblingProper => {
                let w = f.next_sibling.expect("case carries the sibling");
                out.children[w as usize - 1].push(v);
            }
            IllegalCase::RightmostOfProper => {
                // u cannot be the root, since the whole tree is not proper
                let p = self.parent_of(u).expect("u is not the root");
                let slot = &mut out.children[p as usize - 1];
                let i = slot
                    .iter()
                    .position(|&c| c == u)
                    .expect("u is a child of p");
                slot.insert(i, v);
            }
        }
        out
    }

    /// `label(child child ...)`, e.g. `1(3() 2())`.
    pub fn to_labeled_paren(&self) -> String {
        fn go(t: &IncreasingTree, v: u32, out: &mut String) {
            write!(out, "{v}(").unwrap();
            for (i, &c) in t.children_of(v).iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                go(t, c, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        go(self, 1, &mut out);
        out
    }

    pub fn parse_labeled_paren(text: &str) -> Result<Self> {
        struct Parser<'a> {
            bytes: &'a [u8],
            pos: usize,
        }
        impl Parser<'_> {
            fn err(&self, msg: &str) -> Error {
                Error::Parse {
                    pos: self.pos,
                    msg: msg.to_string(),
                }
            }
            fn skip_spaces(&mut self) {
                while self.bytes.get(self.pos) == Some(&b' ') {
                    self.pos += 1;
                }
            }
            // returns (label, child subtrees as (shape, preorder labels))
            fn node(&mut self) -> Result<(OrderedTree, Vec<u32>)> {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.err("expected a label"));
                }
                let label: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ascii digits")
                    .parse()
                    .map_err(|_| self.err("label out of range"))?;
                if self.bytes.get(self.pos) != Some(&b'(') {
                    return Err(self.err("expected `(`"));
                }
                self.pos += 1;
                let mut kids = Vec::new();
                let mut labels = vec![label];
                loop {
                    self.skip_spaces();
                    match self.bytes.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            return Ok((OrderedTree::with_children(kids), labels));
                        }
                        Some(_) => {
                            let (kid, kid_labels) = self.node()?;
                            kids.push(kid);
                            labels.extend(kid_labels);
                        }
                        None => return Err(self.err("unbalanced `(`")),
                    }
                }
            }
        }
        let mut p = Parser {
            bytes: text.trim().as_bytes(),
            pos: 0,
        };
        let (shape, labels) = p.node()?;
        if p.pos != p.bytes.len() {
            return Err(p.err("trailing input after tree"));
        }
        IncreasingTree::new(&shape, &labels)
    }

    /// Graphviz digraph keyed by label; `highlight` is drawn doubled.
    pub fn to_dot(&self, name: &str, highlight: Option<u32>) -> String {
        let mut out = format!("digraph {name} {{\n  node [shape=circle];\n");
        let order = self.preorder();
        for &v in &order {
            if Some(v) == highlight {
                writeln!(out, "  {v} [shape=doublecircle];").unwrap();
            } else {
                writeln!(out, "  {v};").unwrap();
            }
        }
        for &v in &order {
            for &c in self.children_of(v) {
                writeln!(out, "  {v} -> {c};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for IncreasingTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_labeled_paren())
    }
}

/// All increasing labelings of `shape`. Labels are handed out in increasing
/// order, each to a vertex whose parent is already labeled, trying candidate
/// vertices in preorder.
pub fn increasing_labelings(shape: &OrderedTree) -> Vec<IncreasingTree> {
    let n = shape.size();
    // parent of each preorder index
    let mut parent = vec![usize::MAX; n];
    let mut stack: Vec<(&OrderedTree, usize)> = vec![(shape, 0)];
    while let Some((t, id)) = stack.pop() {
        let mut next = id + 1;
        let mut ids = Vec::new();
        for c in t.children() {
            ids.push((c, next));
            parent[next] = id;
            next += c.size();
        }
        stack.extend(ids.into_iter().rev());
    }

    fn extend(
        k: u32,
        labels: &mut Vec<u32>,
        parent: &[usize],
        shape: &OrderedTree,
        out: &mut Vec<IncreasingTree>,
    ) {
        let n = labels.len();
        if k as usize > n {
            out.push(IncreasingTree::new(shape, labels).expect("labeling is increasing"));
            return;
        }
        for v in 1..n {
            if labels[v] == 0 && labels[parent[v]] != 0 {
                labels[v] = k;
                extend(k + 1, labels, parent, shape, out);
                labels[v] = 0;
            }
        }
    }

    let mut labels = vec![0; n];
    labels[0] = 1;
    let mut out = Vec::new();
    extend(2, &mut labels, &parent, shape, &mut out);
    out
}

/// Every increasing ordered tree on `n` vertices: shapes in canonical order,
/// then each shape's labelings.
pub fn enumerate_increasing(n: usize) -> Result<Vec<IncreasingTree>> {
    Ok(enumerate_ordered(n)?
        .iter()
        .flat_map(increasing_labelings)
        .collect())
}

/// Sum of `sign(T)` over all increasing trees on `n` vertices.
pub fn alternate_identity_sum(n: usize) -> Result<i64> {
    Ok(enumerate_increasing(n)?
        .iter()
        .map(|t| t.sign() as i64)
        .sum())
}

/// `n! * sum_T prod_v 1 / (h_v (-1)^(h_v))` over ordered shapes, computed
/// from hook lengths alone.
pub fn alternate_identity_by_hooks(n: usize) -> Result<Rational> {
    let total: Rational = enumerate_ordered(n)?
        .iter()
        .map(|t| {
            let hooks = t.hook_lengths().hooks;
            let den: Rational = hooks.iter().map(|&h| Rational::from(h as i64)).product();
            let sign = if hooks.iter().sum::<u32>() % 2 == 0 {
                1
            } else {
                -1
            };
            Rational::from(sign) / den
        })
        .sum();
    Ok(total * factorial(n as u32))
}

/// Exhaustive check of the involution's properties on all trees of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCheck {
    pub n: usize,
    pub trees: usize,
    pub sign_sum: i64,
    pub fixed_points: usize,
    /// Trees where applying the map twice did not return the input.
    pub not_involutive: usize,
    /// Non-fixed trees whose image has the same sign.
    pub sign_preserved: usize,
    /// Non-proper trees without an illegal leaf.
    pub missing_illegal_leaf: usize,
    /// First-case images whose first illegal leaf is not the moved leaf.
    pub leaf_not_preserved: usize,
}

impl InvolutionCheck {
    pub fn passed(&self) -> bool {
        self.sign_sum == -1
            && self.fixed_points == 1
            && self.not_involutive == 0
            && self.sign_preserved == 0
            && self.missing_illegal_leaf == 0
            && self.leaf_not_preserved == 0
    }
}

pub fn check_involution(n: usize) -> Result<InvolutionCheck> {
    let trees = enumerate_increasing(n)?;
    let mut check = InvolutionCheck {
        n,
        trees: trees.len(),
        sign_sum: 0,
        fixed_points: 0,
        not_involutive: 0,
        sign_preserved: 0,
        missing_illegal_leaf: 0,
        leaf_not_preserved: 0,
    };
    for t in &trees {
        check.sign_sum += t.sign() as i64;
        let image = t.involute();
        if image.involute() != *t {
            check.not_involutive += 1;
        }
        if image == *t {
            check.fixed_points += 1;
            continue;
        }
        if image.sign() == t.sign() {
            check.sign_preserved += 1;
        }
        match t.find_first_illegal_leaf() {
            None => check.missing_illegal_leaf += 1,
            Some(f) if f.case == IllegalCase::NextSiblingProper => {
                let again = image.find_first_illegal_leaf();
                if again.map(|g| g.leaf) != Some(f.leaf) {
                    check.leaf_not_preserved += 1;
                }
            }
            Some(_) => {}
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> IncreasingTree {
        IncreasingTree::parse_labeled_paren(s).unwrap()
    }

    fn double_factorial(k: i64) -> i64 {
        (1..=k).rev().step_by(2).product()
    }

    #[test]
    fn construction_validates_labels() {
        let cherry = OrderedTree::star(3);
        assert!(IncreasingTree::new(&cherry, &[1, 3, 2]).is_ok());
        assert!(IncreasingTree::new(&cherry, &[2, 1, 3]).is_err());
        assert!(IncreasingTree::new(&cherry, &[1, 2, 2]).is_err());
        assert!(IncreasingTree::new(&cherry, &[1, 2]).is_err());
        assert!(IncreasingTree::new(&OrderedTree::path(3), &[1, 3, 2]).is_err());
    }

    #[test]
    fn labeled_paren_round_trip() {
        let tree = t("1(3() 2(4()))");
        assert_eq!(tree.to_labeled_paren(), "1(3() 2(4()))");
        assert_eq!(tree.shape().to_paren(), "(()(()))");
        assert_eq!(tree.preorder(), vec![1, 3, 2, 4]);
        for bad in ["1(", "1()x", "(2())", "1(2() 2())", "2(1())", ""] {
            assert!(
                IncreasingTree::parse_labeled_paren(bad).is_err(),
                "{bad:?} accepted"
            );
        }
        for n in 1..=5 {
            for tree in enumerate_increasing(n).unwrap() {
                assert_eq!(
                    IncreasingTree::parse_labeled_paren(&tree.to_labeled_paren()).unwrap(),
                    tree
                );
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_increasing(2).unwrap().len(), 1);
        let per_shape: Vec<usize> = enumerate_ordered(4)
            .unwrap()
            .iter()
            .map(|s| increasing_labelings(s).len())
            .collect();
        // canonical order is T5, T4, T3, T2, T1 of the usual picture
        assert_eq!(per_shape, vec![1, 2, 3, 3, 6]);
        for n in 2..=7 {
            assert_eq!(
                enumerate_increasing(n).unwrap().len() as i64,
                double_factorial(2 * n as i64 - 3)
            );
        }
        assert_eq!(double_factorial(11), 10395);
    }

    #[test]
    fn per_shape_counts_follow_hook_formula() {
        for n in 1..=7 {
            for shape in enumerate_ordered(n).unwrap() {
                let hooks: u64 = shape
                    .hook_lengths()
                    .hooks
                    .iter()
                    .map(|&h| h as u64)
                    .product();
                let n_fact: u64 = (1..=n as u64).product();
                assert_eq!(increasing_labelings(&shape).len() as u64, n_fact / hooks);
            }
        }
    }

    #[test]
    fn signs() {
        assert_eq!(t("1()").sign(), -1);
        assert_eq!(t("1(2(3(4())))").sign(), 1);
        assert_eq!(t("1(2() 3() 4())").sign(), -1);
    }

    #[test]
    fn properness() {
        assert!(t("1(2() 3() 4())").is_proper());
        assert!(!t("1(3() 2() 4())").is_proper());
        assert!(!t("1(2(3()))").is_proper());
        assert!(t("1()").is_proper());
        assert_eq!(IncreasingTree::proper(4), t("1(2() 3() 4())"));
    }

    #[test]
    fn illegal_leaf_examples() {
        assert_eq!(IncreasingTree::proper(5).find_first_illegal_leaf(), None);
        assert_eq!(
            t("1(3() 2())").find_first_illegal_leaf(),
            Some(IllegalLeafFinding {
                leaf: 3,
                parent: 1,
                next_sibling: Some(2),
                case: IllegalCase::NextSiblingProper,
            })
        );
        assert_eq!(
            t("1(2(3() 4()))").find_first_illegal_leaf(),
            Some(IllegalLeafFinding {
                leaf: 4,
                parent: 2,
                next_sibling: None,
                case: IllegalCase::RightmostOfProper,
            })
        );
    }

    #[test]
    fn involution_examples() {
        let a = t("1(3() 2())");
        let image = a.involute();
        assert_eq!(image, t("1(2(3()))"));
        assert_eq!((a.sign(), image.sign()), (-1, 1));
        let b = t("1(2(3() 4()))");
        let image = b.involute();
        assert_eq!(image, t("1(4() 2(3()))"));
        assert_eq!((b.sign(), image.sign()), (-1, 1));
        assert_eq!(image.involute(), b);
        let p = IncreasingTree::proper(6);
        assert_eq!(p.involute(), p);
    }

    #[test]
    fn exhaustive_properties() {
        for n in 1..=7 {
            let check = check_involution(n).unwrap();
            assert!(check.passed(), "{check:?}");
        }
    }

    #[test]
    fn signed_sum_two_ways() {
        assert_eq!(alternate_identity_sum(1).unwrap(), -1);
        for n in 1..=7 {
            assert_eq!(alternate_identity_sum(n).unwrap(), -1);
            assert_eq!(alternate_identity_by_hooks(n).unwrap(), Rational::from(-1));
        }
    }

    #[test]
    fn dot_highlights_leaf() {
        let dot = t("1(3() 2())").to_dot("before", Some(3));
        assert!(dot.contains("  3 [shape=doublecircle];"));
        assert!(dot.contains("  1 -> 3;\n  1 -> 2;"));
    }
}
