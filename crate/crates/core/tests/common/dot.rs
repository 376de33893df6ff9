//! Independent recursive-descent checker for the Graphviz DOT language.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Kw(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Eq,
    Colon,
    Arrow,
    Dash,
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let mut line_start = true;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line_start = true;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if line_start && c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        line_start = false;
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            i += 2;
            loop {
                if i + 1 >= chars.len() {
                    return Err("unterminated comment".into());
                }
                if chars[i] == '*' && chars[i + 1] == '/' {
                    i += 2;
                    break;
                }
                i += 1;
            }
            continue;
        }
        match c {
            '{' => out.push(Tok::LBrace),
            '}' => out.push(Tok::RBrace),
            '[' => out.push(Tok::LBracket),
            ']' => out.push(Tok::RBracket),
            ';' => out.push(Tok::Semi),
            ',' => out.push(Tok::Comma),
            '=' => out.push(Tok::Eq),
            ':' => out.push(Tok::Colon),
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Tok::Arrow);
                i += 2;
                continue;
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                out.push(Tok::Dash);
                i += 2;
                continue;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err("unterminated string".into()),
                        Some('"') => break,
                        Some('\\') if chars.get(i + 1) == Some(&'"') => {
                            s.push('"');
                            i += 2;
                        }
                        Some('\\') if chars.get(i + 1) == Some(&'\\') => {
                            s.push('\\');
                            i += 2;
                        }
                        Some('\\') if chars.get(i + 1) == Some(&'\n') => i += 2,
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                out.push(Tok::Id(s));
            }
            '<' => {
                let mut depth = 0;
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None => return Err("unterminated HTML string".into()),
                        Some('<') => depth += 1,
                        Some('>') => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Tok::Id(s));
            }
            c if c == '.' || c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|n| *n == '.' || n.is_ascii_digit())) => {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                if num.matches('.').count() > 1 || num == "." || num == "-" {
                    return Err(format!("bad numeral {num}"));
                }
                out.push(Tok::Id(num));
                continue;
            }
            c if c == '_' || c.is_ascii_alphabetic() || (c as u32) >= 0x80 => {
                let start = i;
                while i < chars.len() && (chars[i] == '_' || chars[i].is_ascii_alphanumeric() || (chars[i] as u32) >= 0x80) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let lower = word.to_ascii_lowercase();
                if ["strict", "graph", "digraph", "node", "edge", "subgraph"].contains(&lower.as_str()) {
                    out.push(Tok::Kw(lower));
                } else {
                    out.push(Tok::Id(word));
                }
                continue;
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Default)]
pub struct DotGraph {
    pub directed: bool,
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String, BTreeMap<String, String>)>,
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    graph: DotGraph,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), String> {
        match self.bump() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(format!("expected {t:?}, got {got:?} at token {}", self.pos - 1)),
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.bump() {
            Some(Tok::Id(s)) => Ok(s),
            got => Err(format!("expected ID, got {got:?} at token {}", self.pos - 1)),
        }
    }

    fn graph(&mut self) -> Result<(), String> {
        if self.peek() == Some(&Tok::Kw("strict".into())) {
            self.bump();
        }
        match self.bump() {
            Some(Tok::Kw(k)) if k == "digraph" => self.graph.directed = true,
            Some(Tok::Kw(k)) if k == "graph" => self.graph.directed = false,
            got => return Err(format!("expected graph or digraph, got {got:?}")),
        }
        if matches!(self.peek(), Some(Tok::Id(_))) {
            self.bump();
        }
        self.expect(Tok::LBrace)?;
        self.stmt_list()?;
        self.expect(Tok::RBrace)?;
        if self.pos != self.toks.len() {
            return Err("trailing tokens after graph".into());
        }
        Ok(())
    }

    fn stmt_list(&mut self) -> Result<(), String> {
        while !matches!(self.peek(), Some(Tok::RBrace) | None) {
            self.stmt()?;
            if self.peek() == Some(&Tok::Semi) {
                self.bump();
            }
        }
        Ok(())
    }

    fn attr_list(&mut self) -> Result<BTreeMap<String, String>, String> {
        let mut attrs = BTreeMap::new();
        while self.peek() == Some(&Tok::LBracket) {
            self.bump();
            while matches!(self.peek(), Some(Tok::Id(_))) {
                let k = self.id()?;
                self.expect(Tok::Eq)?;
                let v = self.id()?;
                attrs.insert(k, v);
                if matches!(self.peek(), Some(Tok::Semi) | Some(Tok::Comma)) {
                    self.bump();
                }
            }
            self.expect(Tok::RBracket)?;
        }
        Ok(attrs)
    }

    fn node_id(&mut self) -> Result<String, String> {
        let id = self.id()?;
        if self.peek() == Some(&Tok::Colon) {
            self.bump();
            self.id()?;
            if self.peek() == Some(&Tok::Colon) {
                self.bump();
                self.id()?;
            }
        }
        Ok(id)
    }

    fn subgraph(&mut self) -> Result<Vec<String>, String> {
        if self.peek() == Some(&Tok::Kw("subgraph".into())) {
            self.bump();
            if matches!(self.peek(), Some(Tok::Id(_))) {
                self.bump();
            }
        }
        let before = self.graph.nodes.len();
        self.expect(Tok::LBrace)?;
        self.stmt_list()?;
        self.expect(Tok::RBrace)?;
        Ok(self.graph.nodes[before..].to_vec())
    }

    fn endpoint(&mut self) -> Result<Vec<String>, String> {
        match self.peek() {
            Some(Tok::LBrace) | Some(Tok::Kw(_)) => self.subgraph(),
            _ => Ok(vec![self.node_id()?]),
        }
    }

    fn stmt(&mut self) -> Result<(), String> {
        match self.peek() {
            Some(Tok::Kw(k)) if k == "graph" || k == "node" || k == "edge" => {
                self.bump();
                if self.peek() != Some(&Tok::LBracket) {
                    return Err("attribute statement without attribute list".into());
                }
                self.attr_list()?;
                return Ok(());
            }
            Some(Tok::Id(_)) if self.toks.get(self.pos + 1) == Some(&Tok::Eq) => {
                self.id()?;
                self.bump();
                self.id()?;
                return Ok(());
            }
            _ => {}
        }
        let mut chain = vec![self.endpoint()?];
        while matches!(self.peek(), Some(Tok::Arrow) | Some(Tok::Dash)) {
            let op = self.bump().unwrap();
            if (op == Tok::Arrow) != self.graph.directed {
                return Err(format!("edge operator {op:?} does not match graph kind"));
            }
            chain.push(self.endpoint()?);
        }
        let attrs = self.attr_list()?;
        if chain.len() == 1 {
            for n in &chain[0] {
                if !self.graph.nodes.contains(n) {
                    self.graph.nodes.push(n.clone());
                }
            }
        } else {
            for pair in chain.windows(2) {
                for a in &pair[0] {
                    for b in &pair[1] {
                        self.graph.edges.push((a.clone(), b.clone(), attrs.clone()));
                    }
                }
            }
            for n in chain.iter().flatten() {
                if !self.graph.nodes.contains(n) {
                    self.graph.nodes.push(n.clone());
                }
            }
        }
        Ok(())
    }
}

/// Parses `src` as a DOT graph, returning its nodes and expanded edges.
pub fn parse_dot(src: &str) -> Result<DotGraph, String> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        graph: DotGraph::default(),
    };
    p.graph()?;
    Ok(p.graph)
}

#[cfg(test)]
mod self_check {
    #[allow(unused_imports)]
    use super::parse_dot;

    #[test]
    fn accepts_valid_and_rejects_broken() {
        assert!(parse_dot("digraph g { }").is_ok());
        assert!(parse_dot("strict digraph { a -> b -> c [label=\"x\"]; node [shape=box] x = y }").is_ok());
        assert!(parse_dot("graph { a -- b }").is_ok());
        assert!(parse_dot("digraph g { a -- b }").is_err());
        assert!(parse_dot("digraph g { a -> }").is_err());
        assert!(parse_dot("digraph g { \"a -> b }").is_err());
        assert!(parse_dot("digraph g { a [label=] }").is_err());
        assert!(parse_dot("digraph g { a } extra").is_err());
        let g = parse_dot("digraph { a -> {b c} }").unwrap();
        assert_eq!(g.edges.len(), 2);
    }
}
