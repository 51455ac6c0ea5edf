//! Ordered trees, exhaustive enumeration and per-vertex statistics.

mod enumerate;
mod family;
mod format;

pub use enumerate::{compositions, enumerate_ordered};
pub use family::{weight, weighted_count, FamilyParams};
pub use format::TreeFormat;

use serde::Serialize;

/// Rooted tree whose children are ordered left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

/// Hook lengths and out-degrees of every vertex, in preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexStats {
    pub hooks: Vec<u32>,
    pub degrees: Vec<u32>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree {
            children: Vec::new(),
        }
    }

    pub fn with_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// A chain of `n` vertices.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "a path needs at least one vertex");
        (1..n).fold(OrderedTree::leaf(), |t, _| {
            OrderedTree::with_children(vec![t])
        })
    }

    /// A root with `n - 1` leaf children.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "a star needs at least one vertex");
        OrderedTree::with_children(vec![OrderedTree::leaf(); n - 1])
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(OrderedTree::size).sum::<usize>()
    }

    /// Subtrees rooted at each vertex, root first, children left to right.
    pub fn preorder(&self) -> impl Iterator<Item = &OrderedTree> {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            stack.extend(node.children.iter().rev());
            Some(node)
        })
    }

    pub fn hook_lengths(&self) -> VertexStats {
        let mut stats = VertexStats {
            hooks: Vec::new(),
            degrees: Vec::new(),
        };
        fn walk(t: &OrderedTree, stats: &mut VertexStats) -> u32 {
            let slot = stats.hooks.len();
            stats.hooks.push(0);
            stats.degrees.push(t.children.len() as u32);
            let hook = 1 + t.children.iter().map(|c| walk(c, stats)).sum::<u32>();
            stats.hooks[slot] = hook;
            hook
        }
        walk(self, &mut stats);
        stats
    }
}

impl std::fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_paren())
    }
}
