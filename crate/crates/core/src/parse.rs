//! Parsers for the two external input surfaces: the group-expression
//! grammar and the generators file format. Both reject malformed input
//! with a byte position and never panic on untrusted data.
//!
//! Grammar:
//!   E := sym(n) | alt(n) | cyclic(n) | psl2(q) | pgl2(q) | pgammal2(q)
//!      | psl3_3 | aut_psl3_3 | m11 | psu3_3
//!      | dp(E,E) | wr(E,E) | diag(E) | nla(E,E) | file:<path>
//!
//! Generators file: line 1 `degree <n>`, then one `perm <i0> .. <i(n-1)>`
//! line per generator (0-based images); `#` starts a comment line.

use crate::atlas;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Caps guarding parser-driven construction.
const MAX_FILE_DEGREE: u64 = 4096;
const MAX_EXPR_DEPTH: usize = 16;
const MAX_PRODUCT_DEGREE: u32 = 4096;

pub type FileResolver<'a> = &'a dyn Fn(&str) -> Result<PermGroup>;

/// Parses a group expression, loading `file:` references from disk.
pub fn parse_group_expr(text: &str) -> Result<PermGroup> {
    parse_group_expr_with(text, &|path| {
        let data = std::fs::read_to_string(path)
            .map_err(|e| Error::rejected(format!("cannot read {}: {}", path, e)))?;
        parse_generators_file(&data)
    })
}

/// Parses a group expression with a caller-supplied `file:` resolver
/// (used by the fuzz targets to stay hermetic).
pub fn parse_group_expr_with(text: &str, resolver: FileResolver) -> Result<PermGroup> {
    let mut p = ExprParser {
        text,
        pos: 0,
        resolver,
    };
    p.skip_ws();
    let g = p.expr(0)?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(g)
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
    resolver: FileResolver<'a>,
}

impl<'a> ExprParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .rest()
            .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a constructor name"));
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".to_string(),
            })
    }

    fn int_arg(&mut self) -> Result<u64> {
        self.eat('(')?;
        let n = self.integer()?;
        self.eat(')')?;
        Ok(n)
    }

    fn expr(&mut self, depth: usize) -> Result<PermGroup> {
        if depth > MAX_EXPR_DEPTH {
            return Err(self.err("expression nesting too deep"));
        }
        let name = self.ident()?;
        match name.as_str() {
            "sym" => atlas::sym(self.int_arg()?),
            "alt" => atlas::alt(self.int_arg()?),
            "cyclic" => atlas::cyclic(self.int_arg()?),
            "psl2" => atlas::psl2(self.int_arg()?),
            "pgl2" => atlas::pgl2(self.int_arg()?),
            "pgammal2" => atlas::pgammal2(self.int_arg()?),
            "psl3_3" => atlas::psl3_3(),
            "aut_psl3_3" => atlas::aut_psl3_3(),
            "m11" => atlas::m11(),
            "psu3_3" => atlas::psu3_3(),
            "dp" => {
                self.eat('(')?;
                let a = self.expr(depth + 1)?;
                self.eat(',')?;
                let b = self.expr(depth + 1)?;
                self.eat(')')?;
                if a.degree() + b.degree() > MAX_PRODUCT_DEGREE {
                    return Err(Error::resource("product degree too large".to_string()));
                }
                atlas::direct_product(&a, &b)
            }
            "wr" => {
                self.eat('(')?;
                let a = self.expr(depth + 1)?;
                self.eat(',')?;
                let b = self.expr(depth + 1)?;
                self.eat(')')?;
                atlas::wreath_product(&a, &b)
            }
            "diag" => {
                self.eat('(')?;
                let a = self.expr(depth + 1)?;
                self.eat(')')?;
                if 2 * a.degree() > MAX_PRODUCT_DEGREE {
                    return Err(Error::resource("product degree too large".to_string()));
                }
                Ok(atlas::diagonal_subgroup(&a)?.group().clone())
            }
            "nla" => {
                self.eat('(')?;
                let s = self.expr(depth + 1)?;
                self.eat(',')?;
                let x = self.expr(depth + 1)?;
                self.eat(')')?;
                atlas::nla_like(&s, &x)
            }
            "file" => {
                self.eat(':')?;
                let start = self.pos;
                while !self.rest().is_empty()
                    && !self.rest().starts_with([',', ')'])
                    && !self.rest().starts_with(|c: char| c.is_ascii_whitespace())
                {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(self.err("expected a path after file:"));
                }
                let path = self.text[start..self.pos].to_string();
                (self.resolver)(&path)
            }
            other => Err(Error::Parse {
                pos: self.pos - other.len(),
                msg: format!("unknown constructor '{}'", other),
            }),
        }
    }
}

/// Parses the generators file format into a group.
pub fn parse_generators_file(data: &str) -> Result<PermGroup> {
    let mut degree: Option<u64> = None;
    let mut gens: Vec<Perm> = Vec::new();
    let mut offset = 0usize;
    for line in data.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut words = trimmed.split_ascii_whitespace();
        let head = words.next().unwrap();
        match head {
            "degree" => {
                if degree.is_some() {
                    return Err(Error::Parse {
                        pos,
                        msg: "duplicate degree line".to_string(),
                    });
                }
                let n = words
                    .next()
                    .ok_or(Error::Parse {
                        pos,
                        msg: "degree line needs a value".to_string(),
                    })?
                    .parse::<u64>()
                    .map_err(|_| Error::Parse {
                        pos,
                        msg: "bad degree value".to_string(),
                    })?;
                if n == 0 || n > MAX_FILE_DEGREE {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("degree must be in 1..={}", MAX_FILE_DEGREE),
                    });
                }
                if words.next().is_some() {
                    return Err(Error::Parse {
                        pos,
                        msg: "trailing data on degree line".to_string(),
                    });
                }
                degree = Some(n);
            }
            "perm" => {
                let n = degree.ok_or(Error::Parse {
                    pos,
                    msg: "perm line before degree line".to_string(),
                })?;
                let mut img = Vec::with_capacity(n as usize);
                for w in words {
                    let v = w.parse::<u64>().map_err(|_| Error::Parse {
                        pos,
                        msg: format!("bad image value '{}'", w),
                    })?;
                    if v >= n {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("image {} out of range for degree {}", v, n),
                        });
                    }
                    img.push(v as u32);
                }
                if img.len() as u64 != n {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("perm line has {} images, expected {}", img.len(), n),
                    });
                }
                gens.push(Perm::from_images(img).map_err(|e| Error::Parse {
                    pos,
                    msg: e.to_string(),
                })?);
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown directive '{}'", other),
                });
            }
        }
    }
    let n = degree.ok_or(Error::Parse {
        pos: 0,
        msg: "missing degree line".to_string(),
    })?;
    PermGroup::from_generators(n as u32, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_groups() {
        assert_eq!(parse_group_expr("psl2(11)").unwrap().order(), 660);
        assert_eq!(parse_group_expr(" sym( 5 ) ").unwrap().order(), 120);
        assert_eq!(
            parse_group_expr("wr(sym(5),cyclic(2))").unwrap().order(),
            28800
        );
        assert_eq!(parse_group_expr("dp(sym(3),sym(3))").unwrap().order(), 36);
        assert_eq!(parse_group_expr("diag(alt(5))").unwrap().order(), 60);
        assert_eq!(
            parse_group_expr("nla(alt(5),sym(5))").unwrap().order(),
            14400
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_group_expr("wobble(3)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("expected parse error, got {:?}", other.map(|g| g.order())),
        }
        assert!(parse_group_expr("sym(5").is_err());
        assert!(parse_group_expr("sym(5))").is_err());
        assert!(parse_group_expr("").is_err());
    }

    #[test]
    fn constructor_errors_propagate() {
        assert!(parse_group_expr("psl2(6)").is_err());
        assert!(parse_group_expr("alt(99)").is_err());
    }

    #[test]
    fn generators_file_round_trip() {
        let text = "# five points\ndegree 5\nperm 1 0 2 3 4\nperm 1 2 3 4 0\n";
        let g = parse_generators_file(text).unwrap();
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn generators_file_trivial_group() {
        let g = parse_generators_file("degree 3\n").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.degree(), 3);
    }

    #[test]
    fn generators_file_rejects_bad_input() {
        assert!(parse_generators_file("").is_err());
        assert!(parse_generators_file("degree 0\n").is_err());
        assert!(parse_generators_file("perm 0 1\n").is_err());
        assert!(parse_generators_file("degree 3\nperm 0 0 1\n").is_err());
        assert!(parse_generators_file("degree 3\nperm 0 1\n").is_err());
        assert!(parse_generators_file("degree 3\nperm 0 1 5\n").is_err());
        assert!(parse_generators_file("degree 2\nfoo\n").is_err());
    }

    #[test]
    fn file_resolver_is_pluggable() {
        let g = parse_group_expr_with("file:whatever", &|_| Ok(crate::atlas::cyclic(3).unwrap()))
            .unwrap();
        assert_eq!(g.order(), 3);
        assert!(parse_group_expr_with("file:x", &|_| Err(Error::rejected(
            "no files in fuzzing".to_string()
        )))
        .is_err());
    }
}
