//! Plain-text group specifications.
//!
//! ```text
//! # comments run to the end of the line
//! group S4 = (1 2), (1 2 3 4);
//! subgroup V4 = (1 2)(3 4), (1 3)(2 4);
//! subgroup 1 = ();
//! ```
//!
//! A `subgroup` statement attaches to the most recent `group`. Names are
//! runs of letters, digits, `_` and `x`-style product markers. Points are
//! 1-based; the degree of a group is the largest point mentioned in its
//! statement or in any of its subgroup statements.

use super::finite::{is_normal, FiniteGroup, Subgroup};
use super::perm::Perm;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupDecl {
    pub name: String,
    pub generators: Vec<Vec<Vec<usize>>>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecl {
    pub name: String,
    pub generators: Vec<Vec<Vec<usize>>>,
    pub subgroups: Vec<SubgroupDecl>,
    pub line: usize,
}

/// Parsed specification file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupSpec {
    pub groups: Vec<GroupDecl>,
}

/// A group together with its named subgroups.
#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
}

impl BuiltGroup {
    pub fn subgroup(&self, name: &str) -> Result<&Subgroup> {
        self.subgroups
            .iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownName(format!("{}:{}", self.group.name(), name)))
    }

    /// The named subgroup, checked for normality.
    pub fn normal_subgroup(&self, name: &str) -> Result<&Subgroup> {
        let n = self.subgroup(name)?;
        if is_normal(&self.group, n)? {
            Ok(n)
        } else {
            Err(Error::NotNormal)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Num(usize),
    LParen,
    RParen,
    Comma,
    Eq,
    Semi,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line_no = ln + 1;
        let code = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = code.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                c if c.is_whitespace() => i += 1,
                '(' => {
                    out.push((Tok::LParen, line_no));
                    i += 1
                }
                ')' => {
                    out.push((Tok::RParen, line_no));
                    i += 1
                }
                ',' => {
                    out.push((Tok::Comma, line_no));
                    i += 1
                }
                '=' => {
                    out.push((Tok::Eq, line_no));
                    i += 1
                }
                ';' => {
                    out.push((Tok::Semi, line_no));
                    i += 1
                }
                c if c.is_ascii_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    match word.parse::<usize>() {
                        Ok(n) => out.push((Tok::Num(n), line_no)),
                        Err(_) => out.push((Tok::Word(word), line_no)),
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn line(&self) -> usize {
        self.toks
            .get(self.pos)
            .or(self.toks.last())
            .map_or(1, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line(),
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => {
                self.pos -= 1;
                self.err(format!("expected {want:?}, found {t:?}"))
            }
            None => self.err(format!("expected {want:?}, found end of input")),
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.next() {
            Some(Tok::Word(w)) => Ok(w),
            Some(Tok::Num(n)) => Ok(n.to_string()),
            _ => {
                self.pos -= 1;
                self.err("expected a name")
            }
        }
    }

    /// One permutation: a run of cycles, or `()`.
    fn perm(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        if self.peek() != Some(&Tok::LParen) {
            return self.err("expected '(' to start a permutation");
        }
        while self.peek() == Some(&Tok::LParen) {
            self.next();
            let mut c = Vec::new();
            while let Some(Tok::Num(n)) = self.peek() {
                c.push(*n);
                self.next();
            }
            self.expect(Tok::RParen)?;
            if c.contains(&0) {
                return self.err("points are 1-based");
            }
            if c.len() > 1 {
                cycles.push(c);
            }
        }
        Ok(cycles)
    }

    fn perm_list(&mut self) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Semi) {
            return Ok(out);
        }
        out.push(self.perm()?);
        while self.peek() == Some(&Tok::Comma) {
            self.next();
            out.push(self.perm()?);
        }
        Ok(out)
    }
}

impl GroupSpec {
    pub fn parse(src: &str) -> Result<GroupSpec> {
        let mut p = Parser {
            toks: tokenize(src)?,
            pos: 0,
        };
        let mut spec = GroupSpec::default();
        while let Some(tok) = p.peek().cloned() {
            let line = p.line();
            let Tok::Word(kw) = tok else {
                return p.err("expected 'group' or 'subgroup'");
            };
            p.next();
            let name = p.name()?;
            p.expect(Tok::Eq)?;
            let gens = p.perm_list()?;
            p.expect(Tok::Semi)?;
            match kw.as_str() {
                "group" => {
                    if spec.groups.iter().any(|g| g.name == name) {
                        return Err(Error::Parse {
                            line,
                            msg: format!("duplicate group {name}"),
                        });
                    }
                    spec.groups.push(GroupDecl {
                        name,
                        generators: gens,
                        subgroups: Vec::new(),
                        line,
                    })
                }
                "subgroup" => {
                    let Some(g) = spec.groups.last_mut() else {
                        return Err(Error::Parse {
                            line,
                            msg: "subgroup before any group".into(),
                        });
                    };
                    g.subgroups.push(SubgroupDecl {
                        name,
                        generators: gens,
                        line,
                    })
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unknown keyword {other:?}"),
                    })
                }
            }
        }
        Ok(spec)
    }

    pub fn group(&self, name: &str) -> Result<&GroupDecl> {
        self.groups
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

impl GroupDecl {
    pub fn degree(&self) -> usize {
        self.generators
            .iter()
            .chain(self.subgroups.iter().flat_map(|s| s.generators.iter()))
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(1)
    }

    /// Enumerates the group and resolves every subgroup inside it.
    pub fn build(&self) -> Result<BuiltGroup> {
        let n = self.degree();
        let gens = self
            .generators
            .iter()
            .map(|c| Perm::from_cycles(n, c))
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup::from_permutations(&self.name, &gens)?;
        let mut subgroups = Vec::new();
        for s in &self.subgroups {
            let mut idx = Vec::new();
            for c in &s.generators {
                let p = Perm::from_cycles(n, c)?;
                let i = group.index_of(&p).ok_or_else(|| {
                    Error::NotSubgroup(format!(
                        "generator {p} of {} (line {}) is not in {}",
                        s.name, s.line, self.name
                    ))
                })?;
                idx.push(i);
            }
            subgroups.push(Subgroup::generated(&group, &s.name, &idx));
        }
        Ok(BuiltGroup { group, subgroups })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_example() {
        let spec = GroupSpec::parse(
            "group S4 = (1 2), (1 2 3 4); subgroup V4 = (1 2)(3 4), (1 3)(2 4);",
        )
        .unwrap();
        let built = spec.group("S4").unwrap().build().unwrap();
        assert_eq!(built.group.order(), 24);
        let v4 = built.normal_subgroup("V4").unwrap();
        assert_eq!(v4.order(), 4);
    }

    #[test]
    fn comments_and_trivial_subgroups() {
        let spec = GroupSpec::parse(
            "# cyclic\ngroup C4 = (1 2 3 4);\nsubgroup 1 = ();\nsubgroup E = ;\n",
        )
        .unwrap();
        let built = spec.group("C4").unwrap().build().unwrap();
        assert_eq!(built.subgroup("1").unwrap().order(), 1);
        assert_eq!(built.subgroup("E").unwrap().order(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let err = GroupSpec::parse("group A = (1 2);\nsubgroup B = (1 2;\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = GroupSpec::parse("subgroup B = (1 2);").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn subgroup_generators_must_lie_in_group() {
        let spec = GroupSpec::parse("group C3 = (1 2 3); subgroup X = (1 2);").unwrap();
        assert!(matches!(
            spec.group("C3").unwrap().build().unwrap_err(),
            Error::NotSubgroup(_)
        ));
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let spec = GroupSpec::parse("group S3 = (1 2), (1 2 3); subgroup T = (1 2);").unwrap();
        let built = spec.group("S3").unwrap().build().unwrap();
        assert_eq!(built.normal_subgroup("T").unwrap_err(), Error::NotNormal);
    }
}
