//! Exact bounded-degree computations in the alternating central extension
//! of the q-Onsager algebra and its related presentations.

pub mod cli;
pub mod elements;
pub mod freealg;
pub mod presentations;
pub mod quotient;
pub mod ring;
pub mod verify;
