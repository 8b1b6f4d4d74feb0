//! Text format `SE,(-2,+1)[*NW,W],SE` and a JSON token-array form.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Alphabet, AttachedWalk, Letter, Step, TandemWalk, WalkClass, WalkStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWalkError {
    #[error("bad token `{0}`")]
    BadToken(String),
    #[error("unbalanced brackets")]
    Unbalanced,
    #[error("unknown walk class `{0}`")]
    BadClass(String),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::W => "W",
            Letter::N => "N",
            Letter::NW => "NW",
        })
    }
}

impl fmt::Display for WalkStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Step::SE => write!(f, "SE")?,
            Step::Face(t) => write!(f, "(-{},+{})", t.i, t.j)?,
        }
        if let Some(att) = &self.attached {
            write!(f, "[")?;
            for (k, l) in att.letters.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                if k == 0 && att.alphabet == Alphabet::T {
                    write!(f, "*")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Display for TandemWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for WalkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkClass::Plain => "plain",
            WalkClass::E => "e",
            WalkClass::V => "v",
            WalkClass::T => "t",
        })
    }
}

impl std::str::FromStr for WalkClass {
    type Err = ParseWalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(WalkClass::Plain),
            "e" => Ok(WalkClass::E),
            "v" => Ok(WalkClass::V),
            "t" => Ok(WalkClass::T),
            _ => Err(ParseWalkError::BadClass(s.to_string())),
        }
    }
}

/// Split on commas that are not inside brackets or parentheses.
fn split_top(text: &str) -> Result<Vec<&str>, ParseWalkError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut last = 0;
    for (k, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseWalkError::Unbalanced);
                }
            }
            ',' if depth == 0 => {
                out.push(text[last..k].trim());
                last = k + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseWalkError::Unbalanced);
    }
    out.push(text[last..].trim());
    Ok(out)
}

fn parse_letter(tok: &str) -> Option<Letter> {
    match tok {
        "W" => Some(Letter::W),
        "N" => Some(Letter::N),
        "NW" => Some(Letter::NW),
        _ => None,
    }
}

impl std::str::FromStr for WalkStep {
    type Err = ParseWalkError;

    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || ParseWalkError::BadToken(tok.to_string());
        if tok == "SE" {
            return Ok(Step::SE.into());
        }
        let rest = tok.strip_prefix('(').ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let (nums, tail) = (&rest[..close], &rest[close + 1..]);
        let (xs, ys) = nums.split_once(',').ok_or_else(bad)?;
        let x: i64 = xs.trim().parse().map_err(|_| bad())?;
        let y: i64 = ys.trim().trim_start_matches('+').parse().map_err(|_| bad())?;
        if x > 0 || y < 0 || (x == 0 && xs.trim().starts_with('+')) {
            return Err(bad());
        }
        let step = Step::face((-x) as usize, y as usize);
        if tail.is_empty() {
            return Ok(step.into());
        }
        let inner = tail.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let mut letters = Vec::new();
        let mut alphabet = Alphabet::V;
        for (k, part) in inner.split(',').map(str::trim).enumerate() {
            let (marked, name) = match part.strip_prefix('*') {
                Some(n) => (true, n),
                None => (false, part),
            };
            if marked {
                if k != 0 || name != "NW" {
                    return Err(bad());
                }
                alphabet = Alphabet::T;
            }
            letters.push(parse_letter(name).ok_or_else(bad)?);
        }
        if alphabet == Alphabet::V && letters.contains(&Letter::NW) {
            alphabet = Alphabet::T;
        }
        Ok(WalkStep { step, attached: Some(AttachedWalk::new(alphabet, letters)) })
    }
}

impl TandemWalk {
    /// Parse the comma-separated step tokens of a walk.
    pub fn parse(start: (usize, usize), class: WalkClass, text: &str) -> Result<TandemWalk, ParseWalkError> {
        let text = text.trim();
        let steps = if text.is_empty() {
            Vec::new()
        } else {
            split_top(text)?.into_iter().map(str::parse).collect::<Result<_, _>>()?
        };
        Ok(TandemWalk::new(start, steps, class))
    }

    pub fn to_json(&self) -> WalkJson {
        WalkJson {
            start: [self.start.0, self.start.1],
            class: self.class.to_string(),
            steps: self.steps.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn from_json(json: &WalkJson) -> Result<TandemWalk, ParseWalkError> {
        let class = json.class.parse()?;
        let steps = json.steps.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
        Ok(TandemWalk::new((json.start[0], json.start[1]), steps, class))
    }
}

/// Machine form of a walk: start point, class and one token per step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkJson {
    pub start: [usize; 2],
    pub class: String,
    pub steps: Vec<String>,
}
