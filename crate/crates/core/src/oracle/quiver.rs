//! Quiver presentations and their line-oriented text format.
//!
//! ```text
//! # comment
//! vertices 2
//! arrow a 1 2
//! arrow b 2 1
//! relation 1 a b
//! relation 1 b a + -1/2 b a
//! ```
//!
//! Vertices are numbered from 1. A path is written as its arrow names in
//! traversal order, so `a b` means `a` first, then `b`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A linear combination of paths; each path is a list of arrow indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Q, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(vertices: usize) -> Self {
        QuiverPresentation {
            vertices,
            arrows: Vec::new(),
            relations: Vec::new(),
        }
    }

    /// Adds an arrow and returns its index.
    pub fn arrow(&mut self, name: &str, source: usize, target: usize) -> usize {
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrows.len() - 1
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Adds a relation given as `(coefficient, arrow names)` terms.
    pub fn relation(&mut self, terms: &[(i64, &[&str])]) -> Result<()> {
        let mut out = Vec::with_capacity(terms.len());
        for (c, names) in terms {
            let path = names
                .iter()
                .map(|n| {
                    self.arrow_index(n)
                        .ok_or_else(|| Error::Presentation(format!("unknown arrow {n}")))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push((Q::from_integer(BigInt::from(*c)), path));
        }
        self.relations.push(Relation { terms: out });
        Ok(())
    }

    /// Source and target of a nonempty path, if it is composable.
    pub fn path_ends(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.source;
        for &a in path {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    /// Checks vertex ranges and that every relation is homogeneous in length
    /// (at least 2) and in its endpoints.
    pub fn validate(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::Presentation("no vertices".into()));
        }
        for a in &self.arrows {
            if a.source == 0
                || a.source > self.vertices
                || a.target == 0
                || a.target > self.vertices
            {
                return Err(Error::Presentation(format!(
                    "arrow {} leaves the vertex range",
                    a.name
                )));
            }
        }
        for (k, rel) in self.relations.iter().enumerate() {
            let Some((_, first)) = rel.terms.first() else {
                return Err(Error::Presentation(format!("relation {k} is empty")));
            };
            let len = first.len();
            if len < 2 {
                return Err(Error::Presentation(format!(
                    "relation {k} has length below 2"
                )));
            }
            let ends = self
                .path_ends(first)
                .ok_or_else(|| Error::Presentation(format!("relation {k} has a broken path")))?;
            for (_, p) in &rel.terms {
                if p.len() != len {
                    return Err(Error::Presentation(format!(
                        "relation {k} is not length homogeneous"
                    )));
                }
                if self.path_ends(p) != Some(ends) {
                    return Err(Error::Presentation(format!(
                        "relation {k} mixes paths with different endpoints"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = None;
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut names: HashMap<String, usize> = HashMap::new();
        let mut relations = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let err = |message: String| Error::Parse { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            match words.next() {
                Some("vertices") => {
                    let n = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| err("expected a vertex count".into()))?;
                    if words.next().is_some() {
                        return Err(err("trailing input".into()));
                    }
                    vertices = Some(n);
                }
                Some("arrow") => {
                    let parts: Vec<&str> = words.collect();
                    let [name, src, dst] = parts[..] else {
                        return Err(err("expected: arrow <name> <src> <dst>".into()));
                    };
                    let src = src.parse().map_err(|_| err(format!("bad vertex {src}")))?;
                    let dst = dst.parse().map_err(|_| err(format!("bad vertex {dst}")))?;
                    if names.insert(name.to_string(), arrows.len()).is_some() {
                        return Err(err(format!("duplicate arrow {name}")));
                    }
                    arrows.push(Arrow {
                        name: name.to_string(),
                        source: src,
                        target: dst,
                    });
                }
                Some("relation") => {
                    let rest: Vec<&str> = words.collect();
                    let mut terms = Vec::new();
                    for chunk in rest.split(|w| *w == "+") {
                        let Some((coef, path)) = chunk.split_first() else {
                            return Err(err("empty term".into()));
                        };
                        let coef = parse_rational(coef)
                            .ok_or_else(|| err(format!("bad coefficient {coef}")))?;
                        if path.is_empty() {
                            return Err(err("term without a path".into()));
                        }
                        let path = path
                            .iter()
                            .map(|n| {
                                names
                                    .get(*n)
                                    .copied()
                                    .ok_or_else(|| err(format!("unknown arrow {n}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        terms.push((coef, path));
                    }
                    if terms.is_empty() {
                        return Err(err("empty relation".into()));
                    }
                    relations.push(Relation { terms });
                }
                Some(other) => return Err(err(format!("unknown directive {other}"))),
                None => unreachable!(),
            }
        }
        let p = QuiverPresentation {
            vertices: vertices.ok_or(Error::Parse {
                line: 0,
                message: "missing vertices line".into(),
            })?,
            arrows,
            relations,
        };
        p.validate()?;
        Ok(p)
    }
}

fn parse_rational(word: &str) -> Option<Q> {
    let (num, den) = match word.split_once('/') {
        Some((a, b)) => (a.parse::<BigInt>().ok()?, b.parse::<BigInt>().ok()?),
        None => (word.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Q::new(num, den))
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertices)?;
        for a in &self.arrows {
            writeln!(f, "arrow {} {} {}", a.name, a.source, a.target)?;
        }
        for r in &self.relations {
            write!(f, "relation")?;
            for (k, (c, path)) in r.terms.iter().enumerate() {
                if k > 0 {
                    write!(f, " +")?;
                }
                write!(f, " {c}")?;
                for &a in path {
                    write!(f, " {}", self.arrows[a].name)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two vertices
vertices 2
arrow a 1 2
arrow b 2 1   # back
relation 1 a b
relation 1/2 b a + -3/4 b a
";

    #[test]
    fn parses_and_round_trips() {
        let p = QuiverPresentation::parse(SAMPLE).unwrap();
        assert_eq!(p.vertices, 2);
        assert_eq!(p.arrows.len(), 2);
        assert_eq!(p.relations[1].terms.len(), 2);
        assert_eq!(p.relations[1].terms[1].0, Q::new((-3).into(), 4.into()));
        let again = QuiverPresentation::parse(&p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn rejects_bad_input() {
        let e = QuiverPresentation::parse("vertices 2\narrow a 1 2\nrelation 1 a\n");
        assert!(matches!(e, Err(Error::Presentation(_))));
        let e = QuiverPresentation::parse("vertices 2\narrow a 1 2\nrelation 1 zz zz\n");
        assert!(matches!(e, Err(Error::Parse { line: 3, .. })));
        let e = QuiverPresentation::parse("vertices 2\nfrobnicate\n");
        assert!(matches!(e, Err(Error::Parse { line: 2, .. })));
        let e = QuiverPresentation::parse(
            "vertices 2\narrow a 1 2\narrow b 2 1\nrelation 1 a b + 1 b a\n",
        );
        assert!(matches!(e, Err(Error::Presentation(_))));
        assert!(QuiverPresentation::parse("arrow a 1 2\n").is_err());
        assert!(QuiverPresentation::parse("vertices 2\narrow a 1 2\nrelation 1/0 a a\n").is_err());
    }
}
