//! Rooted partitions and the Möbius and totient functions.
//!
//! Four partition identities tie the number of parts equal to `k` over the
//! partitions of `n` with smallest part at least `r`, written
//! `S_k^{≥r}(n)`, to Euler's totient `φ` and the Möbius function `μ`:
//!
//! ```text
//! (a)  S_1(n) = Σ_{k=2}^{n+1} φ(k)   S_k^{≥2}(n+1)
//! (b)  p(n)   = Σ_{k=3}^{n+3} φ(k)/2 S_k^{≥3}(n+3)
//! (c)  p(n)   = Σ_{k=1}^{n+1} μ(k)   S_k(n+1)
//! (d)  p(n)   = −Σ_{k=2}^{n+2} μ(k)  S_k^{≥2}(n+2)
//! ```
//!
//! This crate implements the bijections proving (a) and (b) and the
//! sign-reversing involutions proving (c) and (d) on rooted partitions, and
//! checks all of them exhaustively for small `n`.
//!
//! * [`numtheory`]: gcd, smallest-prime-factor sieve, `μ`, `φ`, coprime sets.
//! * [`partitions`]: partitions, rooted partitions, direct sum, enumeration,
//!   counting and the statistics `S_k^{≥r}(n)`, `f_k`, `g_k`.
//! * [`bijections`]: the four maps.
//! * [`verify`]: brute-force oracles and identity reports.
//! * [`cli`]: the `rooted-partitions` command-line tool.

pub mod bijections;
pub mod cli;
pub mod numtheory;
pub mod partitions;
pub mod verify;
