//! Exact diagram calculus for the linearized 1-dimensional oriented
//! cobordism category and its pointed extension: walled Brauer
//! endomorphism algebras over Q(t), Gram-determinant semisimplicity
//! certificates, symmetric group character theory, and the grading
//! mechanics of the pointed model.

pub mod brauer;
pub mod cli;
pub mod cob;
pub mod cobplus;
pub mod error;
pub mod exactalg;
pub mod symgrp;
