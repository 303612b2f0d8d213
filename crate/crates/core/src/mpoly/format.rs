use std::fmt;

use super::{MPoly, Monomial, PolyMap};
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Rational};

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl MPoly {
    /// Human-readable form, leading term first: `3 * x1^2*x3 + -1/2 * x2 + 7`.
    pub fn to_human(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.len());
        for (m, c) in self.terms().rev() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{}", names[i], e)
                        }
                    })
                    .collect();
            if vars.is_empty() {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{} * {}", c, vars.join("*")));
            }
        }
        parts.join(" + ")
    }

    /// One line, terms `c e1 … en` joined by ` ; `, leading term first.
    /// The zero polynomial is written `0`.
    pub fn to_machine(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .rev()
            .map(|(m, c)| {
                let mut s = c.to_string();
                for e in &m.0 {
                    s.push(' ');
                    s.push_str(&e.to_string());
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human(&default_names(self.nvars())))
    }
}

/// Parses one line written by [`MPoly::to_machine`].
pub fn parse_machine_line(line: &str, nvars: usize) -> Result<MPoly> {
    let line = line.trim();
    let mut p = MPoly::zero(nvars);
    if line == "0" && nvars > 0 {
        return Ok(p);
    }
    for term in line.split(';') {
        let tokens: Vec<&str> = term.split_whitespace().collect();
        if tokens.len() != nvars + 1 {
            return Err(Error::Parse(format!(
                "term `{}` needs {} fields",
                term.trim(),
                nvars + 1
            )));
        }
        let c: Rational = parse_rational(tokens[0])?;
        let mut e = Vec::with_capacity(nvars);
        for t in &tokens[1..] {
            e.push(
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{t}`")))?,
            );
        }
        p.add_term(Monomial(e), c);
    }
    Ok(p)
}

impl PolyMap {
    /// `polymap n` followed by one machine-format line per component.
    pub fn to_machine(&self) -> String {
        let mut s = format!("polymap {}\n", self.dim());
        for c in self.components() {
            s.push_str(&c.to_machine());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components().iter().enumerate() {
            writeln!(f, "y{} = {}", i + 1, c)?;
        }
        Ok(())
    }
}

pub fn parse_polymap(text: &str) -> Result<PolyMap> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["polymap", n] => n
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad size `{n}`")))?,
        _ => {
            return Err(Error::Parse(format!(
                "expected `polymap <n>`, got `{header}`"
            )))
        }
    };
    let comps = lines
        .map(|l| parse_machine_line(l, n))
        .collect::<Result<Vec<_>>>()?;
    if comps.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} components, got {}",
            comps.len()
        )));
    }
    PolyMap::new(comps)
}
