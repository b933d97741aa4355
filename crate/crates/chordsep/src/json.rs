//! JSON interchange documents. Subsets appear as sorted integer arrays and
//! the ground size is carried at the document root. Every document emitted
//! by the CLI parses back losslessly.

use crate::collection::{SeparatedCollection, SeparationKind};
use crate::plabic_graph::{PlabicGraph, VertexKind};
use crate::plabic_tiling::{Color, PlabicTiling, TriangulatedPlabicTiling};
use crate::subset::{GroundSet, Subset};
use crate::zonotope::{CyclicConfig, Tile, ZonotopalTiling};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// `{"n": 5, "kind": "chord", "sets": [[1,3],[2],...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CollectionDoc {
    pub n: u8,
    pub kind: SeparationKind,
    pub sets: Vec<Subset>,
}

impl CollectionDoc {
    pub fn from_collection(c: &SeparatedCollection) -> Self {
        CollectionDoc {
            n: c.ground().n(),
            kind: c.kind(),
            sets: c.sorted_sets(),
        }
    }

    pub fn to_collection(&self) -> Result<SeparatedCollection> {
        let g = GroundSet::new(self.n)?;
        SeparatedCollection::new(g, self.kind, self.sets.iter().copied())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceDoc {
    pub color: Color,
    pub vertices: Vec<usize>,
}

/// Tiling document: vertices as sorted arrays, faces as vertex-index lists,
/// diagonals as index pairs into `vertices`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingDoc {
    pub n: u8,
    pub level: u8,
    pub vertices: Vec<Subset>,
    pub faces: Vec<FaceDoc>,
    #[serde(default)]
    pub diagonals: Vec<[usize; 2]>,
}

impl TilingDoc {
    pub fn from_plabic(t: &PlabicTiling) -> Self {
        TilingDoc {
            n: t.ground().n(),
            level: t.level(),
            vertices: t.vertices().to_vec(),
            faces: t
                .faces()
                .iter()
                .map(|f| FaceDoc {
                    color: f.color,
                    vertices: f.members.clone(),
                })
                .collect(),
            diagonals: Vec::new(),
        }
    }

    pub fn from_triangulated(t: &TriangulatedPlabicTiling) -> Self {
        let mut doc = Self::from_plabic(t.base());
        doc.diagonals = t.diagonals().iter().map(|&(i, j)| [i, j]).collect();
        doc
    }

    fn rebuild_base(&self) -> Result<PlabicTiling> {
        let g = GroundSet::new(self.n)?;
        let slice = SeparatedCollection::new(g, SeparationKind::Chord, self.vertices.iter().copied())?;
        let base = PlabicTiling::build(&slice)?;
        // the document's face list must agree with the derived complex
        let derived: Vec<FaceDoc> = Self::from_plabic(&base).faces;
        let mut given: Vec<(Color, Vec<Subset>)> = self
            .faces
            .iter()
            .map(|f| {
                let vs = f
                    .vertices
                    .iter()
                    .map(|&i| {
                        self.vertices
                            .get(i)
                            .copied()
                            .ok_or_else(|| Error::InvalidDocument(format!("vertex index {i}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((f.color, vs))
            })
            .collect::<Result<_>>()?;
        let mut want: Vec<(Color, Vec<Subset>)> = derived
            .iter()
            .map(|f| {
                (
                    f.color,
                    f.vertices.iter().map(|&i| base.vertices()[i]).collect(),
                )
            })
            .collect();
        let canon = |fs: &mut Vec<(Color, Vec<Subset>)>| {
            for (_, vs) in fs.iter_mut() {
                vs.sort();
            }
            fs.sort();
        };
        canon(&mut given);
        canon(&mut want);
        if given != want {
            return Err(Error::InvalidDocument(
                "face list does not match the plabic tiling of the vertex set".into(),
            ));
        }
        Ok(base)
    }

    pub fn to_plabic(&self) -> Result<PlabicTiling> {
        if !self.diagonals.is_empty() {
            return Err(Error::InvalidDocument(
                "unexpected diagonals on a plain tiling document".into(),
            ));
        }
        self.rebuild_base()
    }

    pub fn to_triangulated(&self) -> Result<TriangulatedPlabicTiling> {
        let base = self.rebuild_base()?;
        let diagonals: Vec<(Subset, Subset)> = self
            .diagonals
            .iter()
            .map(|&[i, j]| {
                let a = self
                    .vertices
                    .get(i)
                    .ok_or_else(|| Error::InvalidDocument(format!("vertex index {i}")))?;
                let b = self
                    .vertices
                    .get(j)
                    .ok_or_else(|| Error::InvalidDocument(format!("vertex index {j}")))?;
                Ok((*a, *b))
            })
            .collect::<Result<_>>()?;
        TriangulatedPlabicTiling::with_diagonals(base, &diagonals)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKindDoc {
    Boundary(u8),
    White,
    Black,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDoc {
    pub kind: VertexKindDoc,
    /// Incident edge ids, counterclockwise.
    pub rotation: Vec<usize>,
}

/// Graph document: vertices with color and rotation lists of edge ids,
/// boundary markers, and edges as endpoint pairs (the index is the id).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: u8,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &PlabicGraph) -> Self {
        let edges: Vec<[usize; 2]> = (0..g.edge_count())
            .map(|e| {
                let (a, b) = g.edge_endpoints(e);
                [a, b]
            })
            .collect();
        let vertices = (0..g.vertex_count())
            .map(|v| VertexDoc {
                kind: match g.kind(v) {
                    VertexKind::Boundary(i) => VertexKindDoc::Boundary(i),
                    VertexKind::Internal(Color::White) => VertexKindDoc::White,
                    VertexKind::Internal(Color::Black) => VertexKindDoc::Black,
                },
                rotation: g.rotations()[v].iter().map(|&h| h / 2).collect(),
            })
            .collect();
        GraphDoc {
            n: g.n(),
            vertices,
            edges,
        }
    }

    pub fn to_graph(&self) -> Result<PlabicGraph> {
        let kinds: Vec<VertexKind> = self
            .vertices
            .iter()
            .map(|v| match v.kind {
                VertexKindDoc::Boundary(i) => VertexKind::Boundary(i),
                VertexKindDoc::White => VertexKind::Internal(Color::White),
                VertexKindDoc::Black => VertexKind::Internal(Color::Black),
            })
            .collect();
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        let rotations: Vec<Vec<usize>> = self.vertices.iter().map(|v| v.rotation.clone()).collect();
        PlabicGraph::from_parts(self.n, kinds, &edges, &rotations)
    }
}

/// `{"n": 5, "x": [1,2,3,4,5], "tiles": [{"S": [2], "free": [1,3,5]}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZonotopalDoc {
    pub n: u8,
    pub x: Vec<i64>,
    pub tiles: Vec<Tile>,
}

impl ZonotopalDoc {
    pub fn from_tiling(z: &ZonotopalTiling) -> Self {
        ZonotopalDoc {
            n: z.ground().n(),
            x: z.config().xs().to_vec(),
            tiles: z.tiles().iter().copied().collect(),
        }
    }

    pub fn to_tiling(&self) -> Result<ZonotopalTiling> {
        let g = GroundSet::new(self.n)?;
        let config = CyclicConfig::new(g, self.x.clone())?;
        for t in &self.tiles {
            Tile::new(t.base, t.free)?;
        }
        ZonotopalTiling::new(config, self.tiles.iter().copied())
    }
}

/// A family of triangulated tilings, one per level.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub n: u8,
    pub tilings: Vec<TilingDoc>,
}

impl FamilyDoc {
    pub fn from_family(family: &[TriangulatedPlabicTiling]) -> Self {
        FamilyDoc {
            n: family.first().map(|t| t.ground().n()).unwrap_or(0),
            tilings: family.iter().map(TilingDoc::from_triangulated).collect(),
        }
    }

    pub fn to_family(&self) -> Result<Vec<TriangulatedPlabicTiling>> {
        self.tilings.iter().map(|t| t.to_triangulated()).collect()
    }
}
