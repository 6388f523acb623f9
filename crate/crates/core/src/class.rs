//! Degree classes: graphs whose degrees all lie in `[r, s]`, optionally with
//! 5-vertex components forbidden (the subcubic class used for the `v/4`
//! path bound).

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub min_degree: usize,
    pub max_degree: usize,
    pub forbid_five_vertex_components: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassSpecError {
    #[error("minimum degree {0} exceeds maximum degree {1}")]
    EmptyRange(usize, usize),
    #[error("5-vertex components may only be forbidden for degrees in [2, 3]")]
    FiveComponentsOutsideSubcubic,
}

impl ClassSpec {
    pub fn new(
        min_degree: usize,
        max_degree: usize,
        forbid_five_vertex_components: bool,
    ) -> Result<Self, ClassSpecError> {
        if min_degree > max_degree {
            return Err(ClassSpecError::EmptyRange(min_degree, max_degree));
        }
        if forbid_five_vertex_components && (min_degree, max_degree) != (2, 3) {
            return Err(ClassSpecError::FiveComponentsOutsideSubcubic);
        }
        Ok(ClassSpec {
            min_degree,
            max_degree,
            forbid_five_vertex_components,
        })
    }

    pub fn degrees(min_degree: usize, max_degree: usize) -> Result<Self, ClassSpecError> {
        ClassSpec::new(min_degree, max_degree, false)
    }

    /// Degrees in {2, 3} and no 5-vertex component.
    pub fn subcubic_no_five() -> Self {
        ClassSpec {
            min_degree: 2,
            max_degree: 3,
            forbid_five_vertex_components: true,
        }
    }

    /// The input class of the path packer for maximum degree `s`.
    pub fn for_paths(s: usize) -> Self {
        if s == 3 {
            ClassSpec::subcubic_no_five()
        } else {
            ClassSpec {
                min_degree: 2,
                max_degree: s,
                forbid_five_vertex_components: false,
            }
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degrees in [{}, {}]", self.min_degree, self.max_degree)?;
        if self.forbid_five_vertex_components {
            write!(f, ", no 5-vertex components")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassReport {
    /// Vertices whose degree lies outside the range, with that degree.
    pub degree_violations: Vec<(VertexId, usize)>,
    /// Forbidden 5-vertex components, by vertex list.
    pub five_vertex_components: Vec<Vec<VertexId>>,
}

impl ClassReport {
    pub fn is_member(&self) -> bool {
        self.degree_violations.is_empty() && self.five_vertex_components.is_empty()
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_member() {
            return write!(f, "in class");
        }
        let mut parts = Vec::new();
        for (v, d) in &self.degree_violations {
            parts.push(format!("vertex {v} has degree {d}"));
        }
        for c in &self.five_vertex_components {
            let ids: Vec<String> = c.iter().map(ToString::to_string).collect();
            parts.push(format!("5-vertex component [{}]", ids.join(" ")));
        }
        write!(f, "{}", parts.join("; "))
    }
}

pub fn class_membership(g: &Graph, spec: &ClassSpec) -> ClassReport {
    let degree_violations = g
        .vertices()
        .map(|v| (v, g.degree(v)))
        .filter(|&(_, d)| d < spec.min_degree || d > spec.max_degree)
        .collect();
    let five_vertex_components = if spec.forbid_five_vertex_components {
        g.component_sets()
            .into_iter()
            .filter(|c| c.len() == 5)
            .map(|c| c.into_iter().collect())
            .collect()
    } else {
        Vec::new()
    };
    ClassReport {
        degree_violations,
        five_vertex_components,
    }
}

pub fn is_member(g: &Graph, spec: &ClassSpec) -> bool {
    class_membership(g, spec).is_member()
}
