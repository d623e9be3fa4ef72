//! Step-by-step traces of the maps, one `key: value` line per step. The
//! `result:` line is always in the input notation, so it can be fed back to
//! `trace` (e.g. `a` then `a-inv`).

use std::fmt::Write as _;

use clap::ValueEnum;
use thiserror::Error;

use crate::bijections::{
    self, involution_c_steps, involution_d_steps, BijectionError, ImageParseError,
    InvolutionCase, InvolutionSteps, QElement, QSteps, SignedRooted, TotientImage,
};
use crate::partitions::{Marked, NotationError, Partition, RootedPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    A,
    #[value(name = "a-inv")]
    AInv,
    B,
    #[value(name = "b-inv")]
    BInv,
    C,
    D,
}

impl MapName {
    fn label(self) -> &'static str {
        match self {
            MapName::A => "a",
            MapName::AInv => "a-inv",
            MapName::B => "b",
            MapName::BInv => "b-inv",
            MapName::C => "c",
            MapName::D => "d",
        }
    }
}

#[derive(Debug, Error)]
pub enum TraceError {
    #[error("cannot parse input: {0}")]
    Notation(#[from] NotationError),
    #[error("cannot parse input: {0}")]
    Image(#[from] ImageParseError),
    #[error("precondition violated: {0}")]
    Precondition(#[from] BijectionError),
}

/// Renders a partition for the intermediate lines; `()` for the empty one.
fn show(p: &Partition) -> String {
    if p.is_empty() {
        "()".to_string()
    } else {
        p.to_string()
    }
}

fn parse_input(input: &str) -> Result<Marked, NotationError> {
    let trimmed = input.trim();
    if trimmed == "()" {
        return Ok(Marked::Plain(Partition::empty()));
    }
    trimmed.parse()
}

fn parse_rooted(input: &str) -> Result<RootedPartition, TraceError> {
    match parse_input(input)? {
        Marked::Rooted(r) => Ok(r),
        Marked::Plain(_) => Err(NotationError::MissingRoot.into()),
    }
}

fn parse_plain(input: &str) -> Result<Partition, TraceError> {
    match parse_input(input)? {
        Marked::Plain(p) => Ok(p),
        Marked::Rooted(_) => Err(NotationError::UnexpectedRoot.into()),
    }
}

/// Applies `map` once to `input` and returns the trace text.
pub fn trace(map: MapName, input: &str) -> Result<String, TraceError> {
    let mut out = String::new();
    writeln!(out, "map {}", map.label()).unwrap();
    match map {
        MapName::A => {
            let rho = parse_rooted(input)?;
            let s = bijections::map_a_steps(&rho)?;
            writeln!(out, "input: {rho}").unwrap();
            writeln!(out, "split: rest={} ones={}", show(&s.rest), s.ones).unwrap();
            writeln!(out, "params: o={} p={} g={}", s.ones_count, s.position, s.gcd).unwrap();
            writeln!(out, "replace: {}", s.replacement).unwrap();
            writeln!(out, "result: {}", s.image).unwrap();
        }
        MapName::AInv => {
            let image: TotientImage = input.parse()?;
            let s = bijections::inv_a_steps(&image)?;
            writeln!(out, "input: {image}").unwrap();
            writeln!(out, "split: rest={} tail={}", show(&s.rest), s.tail).unwrap();
            writeln!(
                out,
                "params: k={} s={} r={} position={}",
                s.tail.root_value(),
                s.tail_weight,
                image.residue,
                s.position
            )
            .unwrap();
            writeln!(out, "replace: {}", s.ones).unwrap();
            writeln!(out, "result: {}", s.preimage).unwrap();
        }
        MapName::B => {
            let lambda = parse_plain(input)?;
            let s = bijections::map_b_steps(&lambda);
            writeln!(out, "input: {}", show(&lambda)).unwrap();
            writeln!(out, "split: rest={} small={}", show(&s.rest), show(&s.small)).unwrap();
            writeln!(out, "params: s={} t={} g={} k={}", s.s, s.t, s.gcd, s.root).unwrap();
            writeln!(out, "replace: {}", s.replacement).unwrap();
            writeln!(out, "result: {}", s.image).unwrap();
        }
        MapName::BInv => {
            let image: TotientImage = input.parse()?;
            let s = bijections::inv_b_steps(&image)?;
            writeln!(out, "input: {image}").unwrap();
            writeln!(out, "split: rest={} tail={}", show(&s.rest), s.tail).unwrap();
            writeln!(
                out,
                "params: k={} w={} r={} twos={} ones={}",
                s.tail.root_value(),
                s.tail_weight,
                image.residue,
                s.twos,
                s.ones
            )
            .unwrap();
            writeln!(out, "replace: {}", show(&s.small)).unwrap();
            writeln!(out, "result: {}", s.preimage).unwrap();
        }
        MapName::C => {
            let rho = SignedRooted::new(parse_rooted(input)?)?;
            let s = involution_c_steps(&rho);
            let image = SignedRooted::new(s.output.clone())?;
            writeln!(out, "input: {rho}").unwrap();
            write_exchange(&mut out, &s);
            writeln!(out, "sign: {} -> {}", rho.sign(), image.sign()).unwrap();
            writeln!(out, "result: {image}").unwrap();
        }
        MapName::D => {
            let element = match parse_input(input)? {
                Marked::Plain(p) => QElement::Plain(p),
                Marked::Rooted(r) => QElement::rooted(r)?,
            };
            let (steps, image) = involution_d_steps(&element)?;
            let kind = if element.is_plain() { "plain" } else { "rooted" };
            let shown = match &element {
                QElement::Plain(p) => show(p),
                rooted => rooted.to_string(),
            };
            writeln!(out, "input: {shown} ({kind}, n={})", element.parameter()).unwrap();
            match &steps {
                QSteps::Plain(s) => {
                    writeln!(out, "split: rest={} ones={}", show(&s.rest), show(&s.ones)).unwrap();
                    writeln!(out, "params: m={} pi(m)={}", s.m, s.prime).unwrap();
                    writeln!(out, "replace: {}", s.replacement).unwrap();
                }
                QSteps::Rooted { exchange, plain_ones } => {
                    write_exchange(&mut out, exchange);
                    if let Some(ones) = plain_ones {
                        writeln!(out, "plain: root 1 becomes {ones} plain ones").unwrap();
                    }
                }
            }
            writeln!(out, "sign: {} -> {}", element.sign(), image.sign()).unwrap();
            writeln!(out, "result: {image}").unwrap();
        }
    }
    Ok(out)
}

fn write_exchange(out: &mut String, s: &InvolutionSteps) {
    writeln!(out, "split: rest={} tail={}", show(&s.rest), s.tail).unwrap();
    writeln!(
        out,
        "params: k={} m={} pi(k)={} pi(m)={}",
        s.root, s.run, s.min_prime_root, s.min_prime_run
    )
    .unwrap();
    match s.case {
        InvolutionCase::Fixed => {
            writeln!(out, "case: fixed (root is the last 1)").unwrap();
        }
        InvolutionCase::Shrink { value, copies } => {
            writeln!(out, "case: 1 (pi(k) <= pi(m)) k1={value} m1={copies}").unwrap();
            writeln!(out, "replace: {}", RootedPartition::run(value, copies)).unwrap();
        }
        InvolutionCase::Grow { value, copies } => {
            writeln!(out, "case: 2 (pi(k) > pi(m)) k2={value} m2={copies}").unwrap();
            writeln!(out, "replace: {}", RootedPartition::run(value, copies)).unwrap();
        }
    }
}
