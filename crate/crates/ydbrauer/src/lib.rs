//! Exact structure-constant computer algebra for finite-dimensional Hopf
//! algebras: Yetter-Drinfeld modules for automorphism pairs, their tensor
//! and dual operations, endomorphism and smash product algebras, and the
//! Azumaya-style canonical maps, all over GF(p) or Q with no floating point
//! anywhere.

use std::sync::Once;

pub mod algebra;
pub mod cli;
pub mod demo;
pub mod endo;
pub mod error;
pub mod io;
pub mod hopf;
pub mod linalg;
pub mod monoidal;
pub mod report;
pub mod yd;

pub use error::{Error, Result};

static POOL_INIT: Once = Once::new();

/// Configure the global rayon pool from `YDBRAUER_THREADS` (if set).
/// Safe to call repeatedly; only the first call has any effect.
pub fn init_thread_pool() {
    POOL_INIT.call_once(|| {
        if let Ok(v) = std::env::var("YDBRAUER_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    // ignore failure: a pool may already exist in tests
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
                }
            }
        }
    });
}
