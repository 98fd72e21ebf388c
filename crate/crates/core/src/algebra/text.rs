//! Plain-text structure constants.
//!
//! ```text
//! field 2 1
//! dim 2
//! unit 1 0
//! label 1 x
//! c 1 1 0 1      # b1 * b1 = 1 * b0
//! ```
//!
//! Field elements are integer codes `Σ c_i p^i` of the polynomial basis.
//! Only nonzero `c i j k value` lines are needed. A pair file continues with
//! extra blocks, each closed by `end`:
//!
//! ```text
//! subalgebra
//! vec 1 0 0 0
//! end
//! module regular        # or: module dim 3, then one `act i` line per b_i
//! end
//! subspace
//! vec 0 1 0 0
//! end
//! ```
//!
//! `act i e_00 e_01 ...` lists the action matrix of `b_i` row by row.

use std::fmt::Write as _;

use super::{AxiomCheck, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Elem, Field, Matrix};

/// Module data from a pair file.
#[derive(Clone, Debug)]
pub enum ModuleData {
    Regular,
    Matrices(Vec<Matrix>),
}

/// Contents of a pair file, before any structure is derived from them.
#[derive(Clone, Debug)]
pub struct PairFile {
    pub algebra: Algebra,
    pub subalgebra: Vec<Vec<Elem>>,
    pub module: ModuleData,
    pub subspace: Option<Vec<Vec<Elem>>>,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn nums(line: usize, words: &[&str]) -> Result<Vec<u64>> {
    words
        .iter()
        .map(|w| {
            w.parse::<u64>().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a non-negative integer, found {w:?}"),
            })
        })
        .collect()
}

struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Lines<'a> {
        let items = src
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let code = l.split('#').next().unwrap_or("");
                let words: Vec<&str> = code.split_whitespace().collect();
                (!words.is_empty()).then_some((i + 1, words))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.items.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let it = self.items.get(self.pos).cloned();
        self.pos += 1;
        it
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |l| l.0)
    }
}

fn elem(field: &Field, line: usize, x: u64) -> Result<Elem> {
    if x >= field.order() as u64 {
        return perr(line, format!("{x} is not an element code of {field}"));
    }
    Ok(x as Elem)
}

fn vector(field: &Field, dim: usize, line: usize, words: &[&str]) -> Result<Vec<Elem>> {
    let v = nums(line, words)?;
    if v.len() != dim {
        return perr(line, format!("expected {dim} entries, found {}", v.len()));
    }
    v.into_iter().map(|x| elem(field, line, x)).collect()
}

fn parse_algebra_block(lines: &mut Lines, check: AxiomCheck) -> Result<Algebra> {
    let mut field = None;
    let mut dim = None;
    let mut unit = None;
    let mut labels: Vec<String> = Vec::new();
    let mut table: Vec<Vec<(u32, Elem)>> = Vec::new();
    while let Some((line, words)) = lines.peek().cloned() {
        match words[0] {
            "field" => {
                let v = nums(line, &words[1..])?;
                if v.len() != 2 {
                    return perr(line, "usage: field p k");
                }
                field = Some(Field::new(v[0], v[1] as u32)?);
            }
            "dim" => {
                let v = nums(line, &words[1..])?;
                if v.len() != 1 {
                    return perr(line, "usage: dim d");
                }
                let d = v[0] as usize;
                dim = Some(d);
                labels = (0..d).map(|i| format!("b{i}")).collect();
                table = vec![Vec::new(); d * d];
            }
            "unit" | "label" | "c" => {
                let (Some(f), Some(d)) = (&field, dim) else {
                    return perr(line, "field and dim must come first");
                };
                match words[0] {
                    "unit" => unit = Some(vector(f, d, line, &words[1..])?),
                    "label" => {
                        if words.len() != 3 {
                            return perr(line, "usage: label i name");
                        }
                        let i = nums(line, &words[1..2])?[0] as usize;
                        if i >= d {
                            return perr(line, format!("basis index {i} out of range"));
                        }
                        labels[i] = words[2].to_string();
                    }
                    _ => {
                        let v = nums(line, &words[1..])?;
                        if v.len() != 4 {
                            return perr(line, "usage: c i j k value");
                        }
                        let (i, j, k) = (v[0] as usize, v[1] as usize, v[2] as usize);
                        if i >= d || j >= d || k >= d {
                            return perr(line, "basis index out of range");
                        }
                        let c = elem(f, line, v[3])?;
                        let entry = &mut table[i * d + j];
                        if entry.iter().any(|e| e.0 as usize == k) {
                            return perr(line, format!("duplicate constant for ({i}, {j}, {k})"));
                        }
                        entry.push((k as u32, c));
                    }
                }
            }
            _ => break,
        }
        lines.next();
    }
    let line = lines.peek().map_or(lines.last_line(), |l| l.0);
    let (Some(f), Some(d)) = (field, dim) else {
        return perr(line, "missing field or dim");
    };
    let Some(unit) = unit else {
        return perr(line, "missing unit");
    };
    Algebra::new(&f, d, table, unit, labels, check)
}

/// Parses structure constants; axioms are checked.
pub fn parse_algebra(src: &str) -> Result<Algebra> {
    let mut lines = Lines::new(src);
    let a = parse_algebra_block(&mut lines, AxiomCheck::Auto)?;
    if let Some((line, words)) = lines.peek() {
        return perr(*line, format!("unexpected {:?}", words[0]));
    }
    Ok(a)
}

fn vec_block(lines: &mut Lines, field: &Field, dim: usize) -> Result<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    loop {
        let Some((line, words)) = lines.next() else {
            return perr(lines.last_line(), "missing end");
        };
        match words[0] {
            "vec" => out.push(vector(field, dim, line, &words[1..])?),
            "end" => return Ok(out),
            other => return perr(line, format!("unexpected {other:?} in vector block")),
        }
    }
}

pub fn parse_pair_file(src: &str) -> Result<PairFile> {
    let mut lines = Lines::new(src);
    let algebra = parse_algebra_block(&mut lines, AxiomCheck::Auto)?;
    let f = algebra.field().clone();
    let d = algebra.dim();
    let mut subalgebra = None;
    let mut module = None;
    let mut subspace = None;
    while let Some((line, words)) = lines.next() {
        match words[0] {
            "subalgebra" => subalgebra = Some(vec_block(&mut lines, &f, d)?),
            "subspace" => subspace = Some(vec_block(&mut lines, &f, d)?),
            "module" => {
                let data = match words.get(1) {
                    Some(&"regular") => {
                        match lines.next() {
                            Some((_, w)) if w[0] == "end" => {}
                            Some((l, _)) => return perr(l, "expected end after module regular"),
                            None => return perr(lines.last_line(), "missing end"),
                        }
                        ModuleData::Regular
                    }
                    Some(&"dim") => {
                        let m = nums(line, &words[2..])?;
                        if m.len() != 1 {
                            return perr(line, "usage: module dim m");
                        }
                        let m = m[0] as usize;
                        let mut mats: Vec<Option<Matrix>> = vec![None; d];
                        loop {
                            let Some((l, w)) = lines.next() else {
                                return perr(lines.last_line(), "missing end");
                            };
                            match w[0] {
                                "act" => {
                                    if w.len() < 2 {
                                        return perr(l, "usage: act i entries");
                                    }
                                    let i = nums(l, &w[1..2])?[0] as usize;
                                    if i >= d {
                                        return perr(l, format!("basis index {i} out of range"));
                                    }
                                    let e = vector(&f, m * m, l, &w[2..])?;
                                    mats[i] = Some(Matrix::from_vec(&f, m, m, e));
                                }
                                "end" => break,
                                other => return perr(l, format!("unexpected {other:?} in module block")),
                            }
                        }
                        let mut out = Vec::with_capacity(d);
                        for (i, mat) in mats.into_iter().enumerate() {
                            match mat {
                                Some(x) => out.push(x),
                                None => return perr(line, format!("no action given for b{i}")),
                            }
                        }
                        ModuleData::Matrices(out)
                    }
                    _ => return perr(line, "usage: module regular | module dim m"),
                };
                module = Some(data);
            }
            other => return perr(line, format!("unexpected {other:?}")),
        }
    }
    let Some(subalgebra) = subalgebra else {
        return perr(lines.last_line(), "missing subalgebra block");
    };
    Ok(PairFile {
        algebra,
        subalgebra,
        module: module.unwrap_or(ModuleData::Regular),
        subspace,
    })
}

/// Inverse of [`parse_algebra`].
pub fn write_algebra(a: &Algebra) -> String {
    let f = a.field();
    let d = a.dim();
    let mut s = String::new();
    writeln!(s, "field {} {}", f.characteristic(), f.degree()).unwrap();
    writeln!(s, "dim {d}").unwrap();
    let unit: Vec<String> = a.unit().iter().map(|x| x.to_string()).collect();
    writeln!(s, "unit {}", unit.join(" ")).unwrap();
    for (i, l) in a.labels().iter().enumerate() {
        if !l.chars().any(char::is_whitespace) && !l.contains('#') && !l.is_empty() {
            writeln!(s, "label {i} {l}").unwrap();
        }
    }
    for i in 0..d {
        for j in 0..d {
            for &(k, c) in a.basis_product(i, j) {
                writeln!(s, "c {i} {j} {k} {c}").unwrap();
            }
        }
    }
    s
}
