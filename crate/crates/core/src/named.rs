//! Named graphs and the expression grammar used to build them.
//!
//! ```text
//! expr    := term ('+' term)*                 disjoint union
//! term    := [count '*'] primary              repetition
//! primary := atom | 'co(' expr ')' | '(' expr ')'
//! atom    := 'P'n | 'C'n | 'K'n | 'O'n | 'K'p','q | 'K'n'-e'
//!          | paw | fork | gem | hammer | bull | butterfly
//! ```

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on any count in an expression, to keep typos from allocating absurdly.
const MAX_COUNT: usize = 4096;

// Vertex labels x1..x5 as written in the standard definitions.
const FORK: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (4, 5)];
const GEM: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)];
const HAMMER: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)];
const BULL: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5)];
const BUTTERFLY: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)];
// K1,3 with centre x1, plus an edge between two of its leaves.
const PAW: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (2, 3)];

fn one_indexed(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edge_list(n, &e).expect("catalog edge lists are valid")
}

pub fn paw() -> Graph {
    one_indexed(4, PAW)
}
pub fn fork() -> Graph {
    one_indexed(5, FORK)
}
pub fn gem() -> Graph {
    one_indexed(5, GEM)
}
pub fn hammer() -> Graph {
    one_indexed(5, HAMMER)
}
pub fn bull() -> Graph {
    one_indexed(5, BULL)
}
pub fn butterfly() -> Graph {
    one_indexed(5, BUTTERFLY)
}

pub fn claw() -> Graph {
    Graph::complete_bipartite(1, 3)
}

/// `K_n` minus one edge.
pub fn complete_minus_edge(n: usize) -> Graph {
    let edges: Vec<_> = Graph::complete(n).edges().into_iter().filter(|&e| e != (0, 1)).collect();
    Graph::from_edge_list(n, &edges).expect("valid")
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edge_list(10, &e).expect("valid")
}

/// Parse a graph expression such as `K1,3+co(C6)` or `P5+2*K1`.
pub fn named(expr: &str) -> Result<Graph> {
    let mut p = Parser { src: expr.as_bytes(), pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<usize>() {
            Ok(v) if v <= MAX_COUNT => Ok(v),
            _ => Err(Error::Parse { pos: start, msg: format!("count {text} exceeds {MAX_COUNT}") }),
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        while self.eat(b'+') {
            g = g.disjoint_union(&self.term()?);
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let k = self.number()?;
            if !self.eat(b'*') {
                self.pos = start;
                return Err(self.err("a leading count must be followed by '*'"));
            }
            let base = self.primary()?;
            let mut g = Graph::empty(0);
            for _ in 0..k {
                g = g.disjoint_union(&base);
            }
            return Ok(g);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.eat(b'(') {
            let g = self.expr()?;
            self.expect(b')')?;
            return Ok(g);
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters");
        let fixed = match word {
            "co" => {
                self.expect(b'(')?;
                let g = self.expr()?;
                self.expect(b')')?;
                return Ok(g.complement());
            }
            "paw" => Some(paw()),
            "fork" => Some(fork()),
            "gem" => Some(gem()),
            "hammer" => Some(hammer()),
            "bull" => Some(bull()),
            "butterfly" => Some(butterfly()),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let head = match word {
            "P" | "C" | "K" | "O" => word.as_bytes()[0],
            "" => return Err(self.err("expected a graph name")),
            _ => return Err(Error::Parse { pos: start, msg: format!("unknown graph name '{word}'") }),
        };
        let num_pos = self.pos;
        let n = self.number()?;
        let bounded = |min: usize| {
            if n < min {
                Err(Error::Parse { pos: num_pos, msg: format!("{}{n} needs n >= {min}", head as char) })
            } else {
                Ok(())
            }
        };
        match head {
            b'P' => bounded(1).map(|_| Graph::path(n)),
            b'C' => bounded(3).map(|_| Graph::cycle(n)),
            b'O' => bounded(1).map(|_| Graph::empty(n)),
            _ => {
                if self.peek() == Some(b',') {
                    self.pos += 1;
                    let q = self.number()?;
                    bounded(1)?;
                    if q == 0 {
                        return Err(self.err("K_p,q needs q >= 1"));
                    }
                    Ok(Graph::complete_bipartite(n, q))
                } else if self.src[self.pos..].starts_with(b"-e") {
                    self.pos += 2;
                    bounded(2).map(|_| complete_minus_edge(n))
                } else {
                    bounded(1).map(|_| Graph::complete(n))
                }
            }
        }
    }
}

/// Expressions tried, in order, when giving a small graph a human-readable name.
const NAME_CANDIDATES: &[&str] = &[
    "K1", "K2", "P3", "K3", "P4", "K1,3", "C4", "paw", "K4-e", "K4", "P5", "C5", "K5", "K1,4", "fork", "bull",
    "gem", "hammer", "butterfly", "co(P5)", "K5-e", "K2,3", "co(P3+2*K1)", "co(K3+2*K1)", "co(P2+3*K1)",
    "co(P3+P2)", "co(K1,3+K1)", "co(paw+K1)", "co(P4+K1)", "co(C4+K1)", "co(K4-e+K1)", "co(fork)",
    "co(hammer)", "co(bull)", "co(K2,3)", "co(butterfly)", "co(K1,4)", "co(gem)", "O1",
];

/// A catalog name for `g` when one exists (graphs up to five vertices are covered).
pub fn catalog_name(g: &Graph) -> Option<&'static str> {
    use crate::canon::canonical_form;
    let target = canonical_form(g).ok()?;
    NAME_CANDIDATES.iter().copied().find(|s| {
        let h = named(s).expect("candidate names parse");
        h.n() == g.n() && h.edge_count() == g.edge_count() && canonical_form(&h).ok().as_ref() == Some(&target)
    })
}
