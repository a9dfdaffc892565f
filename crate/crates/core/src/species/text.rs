//! Text and JSON wire formats.
//!
//! Trees print as `label(child,child,…)` with children in canonical order
//! (sorted by their own serialization); a leaf prints as its bare label.
//! Aromas print as `cycle[tree;tree;…]` listing the trees hanging off the
//! cycle in the lexicographically minimal rotation. Forests print as
//! `forest{tree;tree|aroma;aroma}`. Marked trees print as `marked{tree}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

use super::aroma::Aroma;
use super::forest::AromaticForest;
use super::tree::{MarkedTree, RootedTree};

fn print_tree_at(t: &RootedTree, v: u32) -> String {
    let mut children: Vec<String> = t
        .children(v)
        .into_iter()
        .map(|c| print_tree_at(t, c))
        .collect();
    if children.is_empty() {
        return v.to_string();
    }
    children.sort();
    format!("{}({})", v, children.join(","))
}

pub fn print_tree(t: &RootedTree) -> String {
    print_tree_at(t, t.root())
}

pub fn print_aroma(a: &Aroma) -> String {
    let cycle = a.cycle();
    let hanging: Vec<String> = cycle
        .iter()
        .map(|&c| {
            let t = a.hanging_tree(c);
            print_tree_at(&t, c)
        })
        .collect();
    // minimal rotation for a label-independent starting point
    let n = hanging.len();
    let best = (0..n)
        .map(|s| {
            (0..n)
                .map(|i| hanging[(s + i) % n].clone())
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap();
    format!("cycle[{}]", best.join(";"))
}

pub fn print_forest(f: &AromaticForest) -> String {
    let trees: Vec<String> = f.trees().iter().map(print_tree).collect();
    let mut aromas: Vec<String> = f.aromas().iter().map(print_aroma).collect();
    aromas.sort();
    format!("forest{{{}|{}}}", trees.join(";"), aromas.join(";"))
}

/// Any object the operadic layer manipulates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Tree(RootedTree),
    Marked(MarkedTree),
    Aroma(Aroma),
}

impl Element {
    pub fn print(&self) -> String {
        match self {
            Element::Tree(t) => print_tree(t),
            Element::Marked(m) => format!("marked{{{}}}", print_tree(m.tree())),
            Element::Aroma(a) => print_aroma(a),
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.print())
    }
}

// ---- parsing ---------------------------------------------------------------

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.s.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {:?} at byte {} of {:?}",
                c as char, self.pos, self.s
            )))
        }
    }

    fn label(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse(format!("expected label at byte {start} of {:?}", self.s)))
    }

    fn done(&self) -> bool {
        self.pos == self.s.len()
    }
}

fn parse_tree_into(cur: &mut Cursor, parent: &mut BTreeMap<u32, u32>) -> Result<u32> {
    let label = cur.label()?;
    if cur.peek() == Some(b'(') {
        cur.bump();
        loop {
            let child = parse_tree_into(cur, parent)?;
            if parent.insert(child, label).is_some() {
                return Err(Error::Parse(format!("repeated label {child}")));
            }
            match cur.bump() {
                Some(b',') => continue,
                Some(b')') => break,
                _ => return Err(Error::Parse(format!("unterminated child list in {:?}", cur.s))),
            }
        }
    }
    Ok(label)
}

pub fn parse_tree(s: &str) -> Result<RootedTree> {
    let mut cur = Cursor::new(s.trim());
    let mut parent = BTreeMap::new();
    let root = parse_tree_into(&mut cur, &mut parent)?;
    if !cur.done() {
        return Err(Error::Parse(format!("trailing data in {s:?}")));
    }
    if parent.contains_key(&root) {
        return Err(Error::Parse(format!("repeated root label in {s:?}")));
    }
    RootedTree::new(root, parent)
}

fn parse_aroma_body(cur: &mut Cursor) -> Result<Aroma> {
    // cycle[t1;t2;...] where t_i are the hanging trees in cycle order
    for c in b"cycle[" {
        cur.expect(*c)?;
    }
    let mut succ: BTreeMap<u32, u32> = BTreeMap::new();
    let mut cycle_roots = Vec::new();
    loop {
        let mut parent = BTreeMap::new();
        let root = parse_tree_into(cur, &mut parent)?;
        for (v, p) in parent {
            if succ.insert(v, p).is_some() {
                return Err(Error::Parse(format!("repeated label {v} in aroma")));
            }
        }
        cycle_roots.push(root);
        match cur.bump() {
            Some(b';') => continue,
            Some(b']') => break,
            _ => return Err(Error::Parse(format!("unterminated aroma in {:?}", cur.s))),
        }
    }
    for i in 0..cycle_roots.len() {
        let v = cycle_roots[i];
        let s = cycle_roots[(i + 1) % cycle_roots.len()];
        if succ.insert(v, s).is_some() {
            return Err(Error::Parse(format!("repeated label {v} in aroma cycle")));
        }
    }
    Aroma::new(succ)
}

pub fn parse_aroma(s: &str) -> Result<Aroma> {
    let mut cur = Cursor::new(s.trim());
    let a = parse_aroma_body(&mut cur)?;
    if !cur.done() {
        return Err(Error::Parse(format!("trailing data in {s:?}")));
    }
    Ok(a)
}

pub fn parse_forest(s: &str) -> Result<(AromaticForest, i32)> {
    let s = s.trim();
    let inner = s
        .strip_prefix("forest{")
        .and_then(|x| x.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected forest{{...}} in {s:?}")))?;
    let (tree_part, aroma_part) = inner
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("expected '|' in forest {s:?}")))?;
    let mut trees = Vec::new();
    if !tree_part.is_empty() {
        for t in tree_part.split(';') {
            trees.push(parse_tree(t)?);
        }
    }
    let mut aromas = Vec::new();
    if !aroma_part.is_empty() {
        // split on ';' only outside the brackets of `cycle[...]`
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, b) in aroma_part.bytes().enumerate() {
            match b {
                b'[' => depth += 1,
                b']' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced ']' in {s:?}")))?
                }
                b';' if depth == 0 => {
                    aromas.push(parse_aroma(&aroma_part[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        aromas.push(parse_aroma(&aroma_part[start..])?);
    }
    AromaticForest::new(trees, aromas)
}

/// Parses any of the element formats (tree, `marked{...}`, `cycle[...]`).
pub fn parse_element(s: &str) -> Result<Element> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix("marked{").and_then(|x| x.strip_suffix('}')) {
        return Ok(Element::Marked(MarkedTree::new(parse_tree(inner)?)));
    }
    if s.starts_with("cycle[") {
        return Ok(Element::Aroma(parse_aroma(s)?));
    }
    Ok(Element::Tree(parse_tree(s)?))
}

// ---- JSON mirror -----------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreeJson {
    pub label: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TreeJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AromaJson {
    /// Hanging trees in cycle order (minimal rotation).
    pub cycle: Vec<TreeJson>,
}

fn tree_json_at(t: &RootedTree, v: u32) -> TreeJson {
    let mut children: Vec<TreeJson> = t
        .children(v)
        .into_iter()
        .map(|c| tree_json_at(t, c))
        .collect();
    children.sort_by_key(|c| print_tree_json_key(c));
    TreeJson { label: v, children }
}

fn print_tree_json_key(t: &TreeJson) -> String {
    let mut parts: Vec<String> = t.children.iter().map(print_tree_json_key).collect();
    parts.sort();
    if parts.is_empty() {
        t.label.to_string()
    } else {
        format!("{}({})", t.label, parts.join(","))
    }
}

impl From<&RootedTree> for TreeJson {
    fn from(t: &RootedTree) -> Self {
        tree_json_at(t, t.root())
    }
}

impl TryFrom<&TreeJson> for RootedTree {
    type Error = Error;

    fn try_from(j: &TreeJson) -> Result<RootedTree> {
        fn collect(j: &TreeJson, parent: &mut BTreeMap<u32, u32>) -> Result<()> {
            for c in &j.children {
                if parent.insert(c.label, j.label).is_some() {
                    return Err(Error::Parse(format!("repeated label {}", c.label)));
                }
                collect(c, parent)?;
            }
            Ok(())
        }
        let mut parent = BTreeMap::new();
        collect(j, &mut parent)?;
        RootedTree::new(j.label, parent)
    }
}

impl From<&Aroma> for AromaJson {
    fn from(a: &Aroma) -> Self {
        let cycle = a.cycle();
        let trees: Vec<TreeJson> = cycle
            .iter()
            .map(|&c| tree_json_at(&a.hanging_tree(c), c))
            .collect();
        let n = trees.len();
        let best = (0..n)
            .min_by_key(|&s| {
                (0..n)
                    .map(|i| print_tree_json_key(&trees[(s + i) % n]))
                    .collect::<Vec<_>>()
            })
            .unwrap_or(0);
        let rotated = (0..n).map(|i| trees[(best + i) % n].clone()).collect();
        AromaJson { cycle: rotated }
    }
}

impl TryFrom<&AromaJson> for Aroma {
    type Error = Error;

    fn try_from(j: &AromaJson) -> Result<Aroma> {
        let mut succ = BTreeMap::new();
        let mut roots = Vec::new();
        for t in &j.cycle {
            let tree = RootedTree::try_from(t)?;
            roots.push(tree.root());
            for (&v, &p) in tree.parent_map() {
                if succ.insert(v, p).is_some() {
                    return Err(Error::Parse(format!("repeated label {v} in aroma")));
                }
            }
        }
        for i in 0..roots.len() {
            let v = roots[i];
            if succ.insert(v, roots[(i + 1) % roots.len()]).is_some() {
                return Err(Error::Parse(format!("repeated label {v} in aroma cycle")));
            }
        }
        Aroma::new(succ)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_round_trip() {
        for s in ["1", "1(2,3(4))", "7(10,11,8(9))"] {
            let t = parse_tree(s).unwrap();
            assert_eq!(print_tree(&t), s);
        }
        assert!(parse_tree("1(1)").is_err());
        assert!(parse_tree("1(").is_err());
    }

    #[test]
    fn aroma_round_trip() {
        for s in ["cycle[1]", "cycle[1;2]", "cycle[1(3);2]"] {
            let a = parse_aroma(s).unwrap();
            assert_eq!(print_aroma(&a), s);
        }
    }

    #[test]
    fn forest_round_trip() {
        // canonical component order puts "(())" before "()", so the two
        // trees swap and the sorting sign is -1
        let (f, sign) = parse_forest("forest{1;2(3)|cycle[4;5]}").unwrap();
        assert_eq!(sign, -1);
        assert_eq!(print_forest(&f), "forest{2(3);1|cycle[4;5]}");
        let (e, _) = parse_forest("forest{|}").unwrap();
        assert_eq!(e.vertex_count(), 0);
    }

    #[test]
    fn json_round_trip() {
        let t = parse_tree("1(2(4),3)").unwrap();
        let j = TreeJson::from(&t);
        assert_eq!(RootedTree::try_from(&j).unwrap(), t);
        let a = parse_aroma("cycle[1(3);2]").unwrap();
        let j = AromaJson::from(&a);
        assert_eq!(Aroma::try_from(&j).unwrap(), a);
    }
}
