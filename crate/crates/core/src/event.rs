//! Finite Boolean algebras of events.
//!
//! A [`SampleSpace`] is an ordered list of named atoms; an [`Event`] is a
//! subset of those atoms stored as a 64-bit mask. Events remember which
//! space they came from and binary operations on events from different
//! spaces fail with [`Error::SpaceMismatch`].

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};

/// Largest supported number of atoms.
pub const MAX_ATOMS: usize = 64;

/// Largest space for which every event may be enumerated.
pub const MAX_ENUMERATED_ATOMS: usize = 16;

const RESERVED: &[char] = &['{', '}', ',', '|', '(', ')', '~', '#', '='];

static NEXT_SPACE_ID: AtomicU32 = AtomicU32::new(1);

/// Identity of a sample space, carried by every event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceTag {
    id: u32,
    len: u8,
}

impl SpaceTag {
    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Bit mask of the whole space.
    pub fn full_mask(self) -> u64 {
        if self.len as usize == MAX_ATOMS {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        }
    }
}

#[derive(Debug, Clone)]
pub struct SampleSpace {
    tag: SpaceTag,
    atoms: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for SampleSpace {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag
    }
}

impl Eq for SampleSpace {}

/// Whether `name` may be used as an atom or as a declared name.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

impl SampleSpace {
    pub fn new<I, S>(atoms: I) -> Result<SampleSpace>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::EmptySpace);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooLarge {
                what: "a sample space",
                n: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, atom) in atoms.iter().enumerate() {
            if !is_valid_name(atom) {
                return Err(Error::InvalidAtomName(atom.clone()));
            }
            if index.insert(atom.clone(), i).is_some() {
                return Err(Error::DuplicateAtom(atom.clone()));
            }
        }
        let tag = SpaceTag {
            id: NEXT_SPACE_ID.fetch_add(1, Ordering::Relaxed),
            len: atoms.len() as u8,
        };
        Ok(SampleSpace { tag, atoms, index })
    }

    /// A space whose atoms are named `1`, `2`, ..., `n`.
    pub fn numbered(n: usize) -> Result<SampleSpace> {
        SampleSpace::new((1..=n).map(|i| i.to_string()))
    }

    pub fn tag(&self) -> SpaceTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn empty(&self) -> Event {
        Event::from_bits(self.tag, 0)
    }

    pub fn full(&self) -> Event {
        Event::from_bits(self.tag, self.tag.full_mask())
    }

    pub fn singleton(&self, index: usize) -> Result<Event> {
        if index >= self.len() {
            return Err(Error::UnknownAtom(format!("#{index}")));
        }
        Ok(Event::from_bits(self.tag, 1 << index))
    }

    pub fn event<I, S>(&self, names: I) -> Result<Event>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for name in names {
            bits |= 1 << self.atom_index(name.as_ref())?;
        }
        Ok(Event::from_bits(self.tag, bits))
    }

    /// Builds an event from a raw mask; bits beyond the space are rejected.
    pub fn event_from_bits(&self, bits: u64) -> Result<Event> {
        if bits & !self.tag.full_mask() != 0 {
            return Err(Error::UnknownAtom(format!("bit mask {bits:#x}")));
        }
        Ok(Event::from_bits(self.tag, bits))
    }

    /// Every event of the space, in ascending bit-vector order.
    pub fn enumerate_events(&self) -> Result<impl Iterator<Item = Event>> {
        if self.len() > MAX_ENUMERATED_ATOMS {
            return Err(Error::TooLarge {
                what: "event enumeration",
                n: self.len(),
                max: MAX_ENUMERATED_ATOMS,
            });
        }
        let tag = self.tag;
        Ok((0..1u64 << self.len()).map(move |bits| Event::from_bits(tag, bits)))
    }

    pub fn contains(&self, event: &Event) -> bool {
        event.tag == self.tag
    }

    pub(crate) fn check(&self, event: &Event) -> Result<()> {
        if self.contains(event) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// `{a,b,...}` with atoms in declaration order.
    pub fn format_event(&self, event: &Event) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for (i, atom) in self.atoms.iter().enumerate() {
            if event.bits >> i & 1 == 1 {
                if !first {
                    out.push(',');
                }
                out.push_str(atom);
                first = false;
            }
        }
        out.push('}');
        out
    }
}

/// A subset of a sample space's atoms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    tag: SpaceTag,
    bits: u64,
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Event({:#b})", self.bits)
    }
}

impl Event {
    pub(crate) fn from_bits(tag: SpaceTag, bits: u64) -> Event {
        debug_assert_eq!(bits & !tag.full_mask(), 0);
        Event { tag, bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn tag(&self) -> SpaceTag {
        self.tag
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.tag.full_mask()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, atom: usize) -> bool {
        atom < self.tag.len() && self.bits >> atom & 1 == 1
    }

    /// Indices of the member atoms, ascending.
    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.tag.len()).filter(move |&i| self.bits >> i & 1 == 1)
    }

    pub(crate) fn same_space(&self, other: &Event) -> Result<()> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn meet(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        Ok(Event::from_bits(self.tag, self.bits & other.bits))
    }

    pub fn join(&self, other: &Event) -> Result<Event> {
        self.same_space(other)?;
        Ok(Event::from_bits(self.tag, self.bits | other.bits))
    }

    pub fn complement(&self) -> Event {
        Event::from_bits(self.tag, !self.bits & self.tag.full_mask())
    }

    pub fn leq(&self, other: &Event) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.bits & !other.bits == 0)
    }
}
