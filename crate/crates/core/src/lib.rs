//! Étale cohomology of tame stacky curves from combinatorial data.

pub mod zlin;
pub mod gcoh;
pub mod stackcurve;
pub mod io;
pub mod fixtures;
pub mod verify;
