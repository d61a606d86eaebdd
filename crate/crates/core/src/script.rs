//! Line-based operation scripts.
//!
//! ```text
//! # comments and blank lines are ignored
//! start @{"n":2,"edges":[[0,1]],"tips":[1]}
//! clone 1
//! pendent 2
//! join 1 3 @partner.graph
//! ```
//!
//! A graft argument is either `@{...}` (an inline graph document) or
//! `@path` (a graph file, relative to the script's directory). Without a
//! `start` line a script starts from `(K2, {1})`.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::GraphFile;
use crate::graft::Graft;
use crate::ops::{GraftBuf, OpRecord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScriptOp {
    Pendent(usize),
    Clone(usize),
    Join { x: Vec<usize>, graft: Graft },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpScript {
    pub start: Graft,
    pub ops: Vec<ScriptOp>,
}

impl Default for OpScript {
    fn default() -> Self {
        OpScript {
            start: Graft::k2(),
            ops: Vec::new(),
        }
    }
}

fn inline(g: &Graft) -> String {
    GraphFile::from_graft(g, None)
        .to_text()
        .trim_end()
        .to_string()
}

impl fmt::Display for OpScript {
    /// Always self-contained: every graft is written inline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start @{}", inline(&self.start))?;
        for op in &self.ops {
            match op {
                ScriptOp::Pendent(t) => writeln!(f, "pendent {t}")?,
                ScriptOp::Clone(t) => writeln!(f, "clone {t}")?,
                ScriptOp::Join { x, graft } => {
                    let xs: Vec<String> = x.iter().map(usize::to_string).collect();
                    writeln!(f, "join {} @{}", xs.join(" "), inline(graft))?
                }
            }
        }
        Ok(())
    }
}

impl OpScript {
    /// Parse a script; `@path` references resolve against `base`.
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let mut script = OpScript::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", i + 1));
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match head {
                "start" => {
                    if !script.ops.is_empty() {
                        return Err(at("start must come before any operation".into()));
                    }
                    script.start = load_graft(rest, base).map_err(|e| at(e.to_string()))?;
                }
                "pendent" | "clone" => {
                    let t = rest
                        .parse()
                        .map_err(|_| at(format!("expected one vertex, found {rest:?}")))?;
                    script.ops.push(if head == "pendent" {
                        ScriptOp::Pendent(t)
                    } else {
                        ScriptOp::Clone(t)
                    });
                }
                "join" => {
                    let (xs, graft) = rest
                        .split_once('@')
                        .ok_or_else(|| at("join needs a graft argument after '@'".into()))?;
                    let x = xs
                        .split_whitespace()
                        .map(|s| s.parse().map_err(|_| at(format!("bad vertex {s:?}"))))
                        .collect::<Result<Vec<usize>>>()?;
                    let graft =
                        load_graft(&format!("@{graft}"), base).map_err(|e| at(e.to_string()))?;
                    script.ops.push(ScriptOp::Join { x, graft });
                }
                other => return Err(at(format!("unknown operation {other:?}"))),
            }
        }
        Ok(script)
    }

    /// Apply every operation in order.
    pub fn run(&self) -> Result<(Graft, Vec<OpRecord>)> {
        let mut buf = GraftBuf::from_graft(&self.start);
        let mut records = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            records.push(apply(&mut buf, op)?);
        }
        Ok((buf.to_graft(), records))
    }
}

pub(crate) fn apply(buf: &mut GraftBuf, op: &ScriptOp) -> Result<OpRecord> {
    match op {
        ScriptOp::Pendent(t) => buf.pendent(*t),
        ScriptOp::Clone(t) => buf.clone_tip(*t),
        ScriptOp::Join { x, graft } => buf.join(x, &GraftBuf::from_graft(graft)),
    }
}

fn load_graft(arg: &str, base: Option<&Path>) -> Result<Graft> {
    let arg = arg
        .strip_prefix('@')
        .ok_or_else(|| Error::Parse(format!("expected '@' before a graft, found {arg:?}")))?
        .trim();
    let text = if arg.starts_with('{') {
        arg.to_string()
    } else {
        let path = base.map_or_else(|| Path::new(arg).to_path_buf(), |b| b.join(arg));
        std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    GraphFile::parse(&text)?.graft()
}
