use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::OrderedTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    /// `tree := "(" tree* ")"`
    Paren,
    /// `{"children":[...]}`
    Json,
    /// Graphviz digraph, vertices numbered in preorder.
    Dot,
}

impl FromStr for TreeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paren" => Ok(TreeFormat::Paren),
            "json" => Ok(TreeFormat::Json),
            "dot" => Ok(TreeFormat::Dot),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown tree format `{s}`"),
            }),
        }
    }
}

impl OrderedTree {
    pub fn serialize(&self, format: TreeFormat) -> String {
        match format {
            TreeFormat::Paren => self.to_paren(),
            TreeFormat::Json => serde_json::to_string(self).expect("tree serializes to JSON"),
            TreeFormat::Dot => self.to_dot(),
        }
    }

    pub fn to_paren(&self) -> String {
        let mut out = String::with_capacity(2 * self.size());
        fn go(t: &OrderedTree, out: &mut String) {
            out.push('(');
            for c in &t.children {
                go(c, out);
            }
            out.push(')');
        }
        go(self, &mut out);
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n  node [shape=point];\n");
        let n = self.size();
        for v in 0..n {
            writeln!(out, "  {v};").unwrap();
        }
        // preorder numbering: a child's index is its parent's index plus the
        // sizes of everything visited before it
        fn edges(t: &OrderedTree, id: usize, out: &mut String) {
            let mut next = id + 1;
            for c in &t.children {
                writeln!(out, "  {id} -> {next};").unwrap();
                edges(c, next, out);
                next += c.size();
            }
        }
        edges(self, 0, &mut out);
        out.push_str("}\n");
        out
    }

    pub fn parse_paren(text: &str) -> Result<OrderedTree> {
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty input".into(),
            });
        }
        // stack of partially built vertices
        let mut stack: Vec<Vec<OrderedTree>> = Vec::new();
        let mut done: Option<OrderedTree> = None;
        for (pos, &b) in bytes.iter().enumerate() {
            if done.is_some() {
                return Err(Error::Parse {
                    pos,
                    msg: "trailing input after tree".into(),
                });
            }
            match b {
                b'(' => stack.push(Vec::new()),
                b')' => {
                    let children = stack.pop().ok_or_else(|| Error::Parse {
                        pos,
                        msg: "unbalanced `)`".into(),
                    })?;
                    let node = OrderedTree::with_children(children);
                    match stack.last_mut() {
                        Some(parent) => parent.push(node),
                        None => done = Some(node),
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected character `{}`", b as char),
                    })
                }
            }
        }
        done.ok_or(Error::Parse {
            pos: bytes.len(),
            msg: "unbalanced `(`".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::enumerate_ordered;

    #[test]
    fn paren_of_named_shapes() {
        assert_eq!(OrderedTree::leaf().to_paren(), "()");
        assert_eq!(OrderedTree::star(4).to_paren(), "(()()())");
        let t4 = OrderedTree::with_children(vec![OrderedTree::star(3)]);
        assert_eq!(t4.to_paren(), "((()()))");
    }

    #[test]
    fn parse_accepts_and_rejects() {
        assert_eq!(OrderedTree::parse_paren("()").unwrap(), OrderedTree::leaf());
        assert_eq!(
            OrderedTree::parse_paren("(()()())").unwrap(),
            OrderedTree::star(4)
        );
        for bad in ["(()", "", "())", "()()", "(x)", ")("] {
            assert!(OrderedTree::parse_paren(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn paren_round_trips() {
        for n in 1..=8 {
            for t in enumerate_ordered(n).unwrap() {
                assert_eq!(OrderedTree::parse_paren(&t.to_paren()).unwrap(), t);
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = OrderedTree::parse_paren("(()(()))").unwrap();
        assert_eq!(
            t.serialize(TreeFormat::Json),
            r#"{"children":[{"children":[]},{"children":[{"children":[]}]}]}"#
        );
    }

    #[test]
    fn dot_numbers_in_preorder() {
        let t = OrderedTree::parse_paren("((())())").unwrap();
        let dot = t.serialize(TreeFormat::Dot);
        let edges: Vec<&str> = dot
            .lines()
            .filter(|l| l.contains("->"))
            .map(str::trim)
            .collect();
        assert_eq!(edges, ["0 -> 1;", "1 -> 2;", "0 -> 3;"]);
        assert!(OrderedTree::leaf().to_dot().contains("  0;\n"));
    }
}
