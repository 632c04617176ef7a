//! Seeded single-event corruption of strands.
//!
//! Randomness comes from ChaCha8 (`rand_chacha` 0.3). Strand `i` of a run with
//! seed `s` draws from stream `i` of the generator seeded with `s`, so results
//! do not depend on how strands are scheduled across threads.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::dnamap::{Base, Strand};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChannelError {
    #[error("{kind} position {position} out of range for strand of length {len}")]
    OutOfRange {
        kind: EventKind,
        position: usize,
        len: usize,
    },
    #[error("{0} event needs a base")]
    MissingBase(EventKind),
    #[error("substitution at position {0} replaces a base with itself")]
    SelfSubstitution(usize),
    #[error("invalid error mix: {0}")]
    InvalidMix(String),
    #[error("invalid event log line {line:?}: {reason}")]
    InvalidLog { line: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Delete,
    Insert,
    Substitute,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Delete => "delete",
            EventKind::Insert => "insert",
            EventKind::Substitute => "substitute",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One edit. `position` is 1-indexed; for insertions it is the position the
/// new base occupies afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChannelEvent {
    pub kind: EventKind,
    pub position: usize,
    pub base: Option<Base>,
}

impl ChannelEvent {
    pub fn delete(position: usize) -> Self {
        Self {
            kind: EventKind::Delete,
            position,
            base: None,
        }
    }

    pub fn insert(position: usize, base: Base) -> Self {
        Self {
            kind: EventKind::Insert,
            position,
            base: Some(base),
        }
    }

    pub fn substitute(position: usize, base: Base) -> Self {
        Self {
            kind: EventKind::Substitute,
            position,
            base: Some(base),
        }
    }
}

impl fmt::Display for ChannelEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.position)?;
        if let Some(b) = self.base {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

pub fn apply_event(s: &Strand, e: &ChannelEvent) -> Result<Strand, ChannelError> {
    let len = s.len();
    let limit = match e.kind {
        EventKind::Insert => len + 1,
        _ => len,
    };
    if e.position == 0 || e.position > limit {
        return Err(ChannelError::OutOfRange {
            kind: e.kind,
            position: e.position,
            len,
        });
    }
    let mut out = s.clone();
    let bases = out.bases_mut();
    match e.kind {
        EventKind::Delete => {
            bases.remove(e.position - 1);
        }
        EventKind::Insert => {
            let b = e.base.ok_or(ChannelError::MissingBase(e.kind))?;
            bases.insert(e.position - 1, b);
        }
        EventKind::Substitute => {
            let b = e.base.ok_or(ChannelError::MissingBase(e.kind))?;
            if bases[e.position - 1] == b {
                return Err(ChannelError::SelfSubstitution(e.position));
            }
            bases[e.position - 1] = b;
        }
    }
    Ok(out)
}

/// Probabilities of each outcome per strand. Parsed from
/// `del:p,ins:p,sub:p,none:p`; omitted keys are 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorMix {
    pub delete: f64,
    pub insert: f64,
    pub substitute: f64,
    pub none: f64,
}

impl ErrorMix {
    pub fn new(delete: f64, insert: f64, substitute: f64, none: f64) -> Result<Self, ChannelError> {
        let mix = Self {
            delete,
            insert,
            substitute,
            none,
        };
        mix.validate()?;
        Ok(mix)
    }

    pub fn clean() -> Self {
        Self {
            delete: 0.0,
            insert: 0.0,
            substitute: 0.0,
            none: 1.0,
        }
    }

    /// Equal thirds over the three error kinds.
    pub fn uniform_errors() -> Self {
        Self {
            delete: 1.0 / 3.0,
            insert: 1.0 / 3.0,
            substitute: 1.0 / 3.0,
            none: 0.0,
        }
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        let parts = [self.delete, self.insert, self.substitute, self.none];
        if parts.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(ChannelError::InvalidMix(
                "probabilities must be finite and non-negative".into(),
            ));
        }
        let sum: f64 = parts.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(ChannelError::InvalidMix(format!(
                "probabilities sum to {sum}, not 1"
            )));
        }
        Ok(())
    }

    fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<EventKind> {
        let u: f64 = rng.gen();
        if u < self.delete {
            Some(EventKind::Delete)
        } else if u < self.delete + self.insert {
            Some(EventKind::Insert)
        } else if u < self.delete + self.insert + self.substitute {
            Some(EventKind::Substitute)
        } else {
            None
        }
    }
}

impl FromStr for ErrorMix {
    type Err = ChannelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut mix = Self {
            delete: 0.0,
            insert: 0.0,
            substitute: 0.0,
            none: 0.0,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once(':')
                .ok_or_else(|| ChannelError::InvalidMix(format!("expected key:p, got {part:?}")))?;
            let p: f64 = value
                .trim()
                .parse()
                .map_err(|_| ChannelError::InvalidMix(format!("bad probability {value:?}")))?;
            let slot = match key.trim() {
                "del" => &mut mix.delete,
                "ins" => &mut mix.insert,
                "sub" => &mut mix.substitute,
                "none" => &mut mix.none,
                other => return Err(ChannelError::InvalidMix(format!("unknown key {other:?}"))),
            };
            *slot = p;
        }
        mix.validate()?;
        Ok(mix)
    }
}

/// Generator for strand `index` of a run seeded with `seed`.
pub fn strand_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Applies at most one random event drawn from `mix`.
pub fn random_event<R: Rng + ?Sized>(
    s: &Strand,
    mix: &ErrorMix,
    rng: &mut R,
) -> (Strand, Option<ChannelEvent>) {
    let Some(kind) = mix.draw(rng) else {
        return (s.clone(), None);
    };
    let len = s.len();
    let event = match kind {
        EventKind::Insert => {
            let pos = rng.gen_range(1..=len + 1);
            ChannelEvent::insert(pos, Base::ALL[rng.gen_range(0..4)])
        }
        _ if len == 0 => return (s.clone(), None),
        EventKind::Delete => ChannelEvent::delete(rng.gen_range(1..=len)),
        EventKind::Substitute => {
            let pos = rng.gen_range(1..=len);
            let current = s.get(pos);
            let others: Vec<Base> = Base::ALL.into_iter().filter(|&b| b != current).collect();
            ChannelEvent::substitute(pos, others[rng.gen_range(0..3)])
        }
    };
    let out = apply_event(s, &event).expect("event drawn within bounds");
    (out, Some(event))
}

/// Draws up to `max_events` events in sequence. Anything above one is outside
/// what the codec corrects; use it for failure-rate studies only.
pub fn random_events<R: Rng + ?Sized>(
    s: &Strand,
    mix: &ErrorMix,
    max_events: usize,
    rng: &mut R,
) -> (Strand, Vec<ChannelEvent>) {
    let mut cur = s.clone();
    let mut events = Vec::new();
    for _ in 0..max_events {
        let (next, e) = random_event(&cur, mix, rng);
        cur = next;
        events.extend(e);
    }
    (cur, events)
}

/// One line of an event log: `<index> <kind> <pos> [<base>]`, or
/// `<index> none` for an untouched strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventLogEntry {
    pub index: usize,
    pub event: Option<ChannelEvent>,
}

impl fmt::Display for EventLogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.event {
            Some(e) => write!(f, "{} {e}", self.index),
            None => write!(f, "{} none", self.index),
        }
    }
}

impl FromStr for EventLogEntry {
    type Err = ChannelError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| ChannelError::InvalidLog {
            line: line.to_string(),
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let index = fields
            .first()
            .ok_or_else(|| bad("empty line"))?
            .parse()
            .map_err(|_| bad("bad index"))?;
        let base = |f: Option<&&str>| -> Result<Base, ChannelError> {
            let f = f.ok_or_else(|| bad("missing base"))?;
            let mut chars = f.chars();
            match (chars.next().and_then(Base::from_char), chars.next()) {
                (Some(b), None) => Ok(b),
                _ => Err(bad("bad base")),
            }
        };
        let pos = || -> Result<usize, ChannelError> {
            fields
                .get(2)
                .ok_or_else(|| bad("missing position"))?
                .parse()
                .map_err(|_| bad("bad position"))
        };
        let (event, expected_fields) = match fields.get(1).copied() {
            Some("none") => (None, 2),
            Some("delete") => (Some(ChannelEvent::delete(pos()?)), 3),
            Some("insert") => (Some(ChannelEvent::insert(pos()?, base(fields.get(3))?)), 4),
            Some("substitute") => (
                Some(ChannelEvent::substitute(pos()?, base(fields.get(3))?)),
                4,
            ),
            _ => return Err(bad("unknown kind")),
        };
        if fields.len() != expected_fields {
            return Err(bad("wrong number of fields"));
        }
        Ok(Self { index, event })
    }
}

/// Corrupts every strand independently with up to `events_per_strand` events.
/// Returns the corrupted strands and the event log in strand order.
pub fn corrupt_strands(
    strands: &[Strand],
    mix: &ErrorMix,
    seed: u64,
    events_per_strand: usize,
) -> (Vec<Strand>, Vec<EventLogEntry>) {
    let results: Vec<(Strand, Vec<ChannelEvent>)> = strands
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut rng = strand_rng(seed, i as u64);
            random_events(s, mix, events_per_strand, &mut rng)
        })
        .collect();

    let mut out = Vec::with_capacity(strands.len());
    let mut log = Vec::new();
    for (index, (s, events)) in results.into_iter().enumerate() {
        out.push(s);
        if events.is_empty() {
            log.push(EventLogEntry { index, event: None });
        } else {
            log.extend(events.into_iter().map(|e| EventLogEntry {
                index,
                event: Some(e),
            }));
        }
    }
    (out, log)
}
