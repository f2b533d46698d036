//! Exact computation of categorical centers of higher genera for skeletal
//! premodular categories.
//!
//! The crate is organised bottom-up: [`exactnum`] supplies cyclotomic
//! scalars and linear algebra, [`fusion`] holds category data and its
//! validators, [`diagram`] evaluates ribbon diagrams in fusion-tree bases,
//! [`gluing`] handles admissible gluings and surface types, and [`center`]
//! builds induced objects, projections and the tube algebra whose blocks
//! count the simple objects of the center.
//!
//! ```
//! use genuscenter::{catalog, center, gluing::Gluing};
//!
//! let fib = catalog::builtin("fibonacci")?;
//! let torus = Gluing::parse("(1 3)(2 4)")?;
//! assert_eq!(center::center_rank(&fib, &torus)?.rank, 2);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod catalog;
pub mod center;
pub mod diagram;
pub mod exactnum;
pub mod fusion;
pub mod gluing;
