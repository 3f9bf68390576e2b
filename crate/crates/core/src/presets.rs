//! Catalog of the map families studied in the source figures, with their
//! exact Jacobians and nonlinearity coefficients.

use crate::map::{HenonMap, PolyNonlinearity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// B=0.7, f = −z²: discrete Lorenz attractors
    LorenzZ2,
    /// B=0.72, f = −y² + 0.515yz − 1.45z²: discrete figure-8 attractor
    Fig8Quad,
    /// B=0.5, f = −2y³ − 2.25z³: discrete double figure-8 attractor
    DoubleFig8,
    /// B=0.05, f = y³ − z³: discrete super figure-8 attractor
    SuperFig8,
    /// B=0.7, f = −y² − 1.45z²: figure-8 quasiattractor
    Fig8Quasi,
    /// B=0.5, f = −y³: "book" attractors with a (1,2)-saddle
    BookCubic,
    /// B=0.5, f = 0.5y³ − 6zy² + 0.5z³: spiral quasiattractor
    SpiralCubic,
    /// B=0.5, f = −y²: discrete Shilnikov attractor
    ShilnikovQuad,
    /// B=0, f = −z²: the two-dimensional Hénon family
    Henon2d,
}

impl Preset {
    pub const ALL: [Preset; 9] = [
        Preset::LorenzZ2,
        Preset::Fig8Quad,
        Preset::DoubleFig8,
        Preset::SuperFig8,
        Preset::Fig8Quasi,
        Preset::BookCubic,
        Preset::SpiralCubic,
        Preset::ShilnikovQuad,
        Preset::Henon2d,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::LorenzZ2 => "lorenz-z2",
            Preset::Fig8Quad => "fig8-quad",
            Preset::DoubleFig8 => "double-fig8",
            Preset::SuperFig8 => "super-fig8",
            Preset::Fig8Quasi => "fig8-quasi",
            Preset::BookCubic => "book-cubic",
            Preset::SpiralCubic => "spiral-cubic",
            Preset::ShilnikovQuad => "shilnikov-quad",
            Preset::Henon2d => "henon2d",
        }
    }

    pub fn from_name(name: &str) -> Option<Preset> {
        Preset::ALL.iter().copied().find(|p| p.name() == name)
    }

    pub fn b(&self) -> f64 {
        match self {
            Preset::LorenzZ2 => 0.7,
            Preset::Fig8Quad => 0.72,
            Preset::DoubleFig8 => 0.5,
            Preset::SuperFig8 => 0.05,
            Preset::Fig8Quasi => 0.7,
            Preset::BookCubic => 0.5,
            Preset::SpiralCubic => 0.5,
            Preset::ShilnikovQuad => 0.5,
            Preset::Henon2d => 0.0,
        }
    }

    pub fn nonlinearity(&self) -> PolyNonlinearity {
        let terms: &[((u32, u32), f64)] = match self {
            Preset::LorenzZ2 => &[((0, 2), -1.0)],
            Preset::Fig8Quad => &[((2, 0), -1.0), ((1, 1), 0.515), ((0, 2), -1.45)],
            Preset::DoubleFig8 => &[((3, 0), -2.0), ((0, 3), -2.25)],
            Preset::SuperFig8 => &[((3, 0), 1.0), ((0, 3), -1.0)],
            Preset::Fig8Quasi => &[((2, 0), -1.0), ((0, 2), -1.45)],
            Preset::BookCubic => &[((3, 0), -1.0)],
            Preset::SpiralCubic => &[((3, 0), 0.5), ((2, 1), -6.0), ((0, 3), 0.5)],
            Preset::ShilnikovQuad => &[((2, 0), -1.0)],
            Preset::Henon2d => &[((0, 2), -1.0)],
        };
        PolyNonlinearity::new(terms.iter().copied()).expect("preset terms have degree >= 2")
    }

    pub fn map(&self, a: f64, c: f64) -> HenonMap {
        HenonMap::new(a, self.b(), c, self.nonlinearity())
    }

    /// (A, C) values at which the family's attractors are illustrated.
    pub fn reference_points(&self) -> &'static [(f64, f64)] {
        match self {
            Preset::LorenzZ2 => &[(-1.1, 0.85), (-1.11, 0.77)],
            Preset::Fig8Quad => &[(-1.86, 0.03)],
            Preset::DoubleFig8 => &[(0.82, 2.06)],
            Preset::SuperFig8 => &[(3.71, -2.75)],
            Preset::Fig8Quasi => &[(-1.86, 0.03)],
            Preset::BookCubic => &[(0.13, 1.72), (-0.75, 1.5)],
            Preset::SpiralCubic => &[(2.13, -1.29)],
            Preset::ShilnikovQuad => &[(1.43, -1.84)],
            // both 2D panels; the second is the classic Hénon attractor
            Preset::Henon2d => &[(-1.92, -0.4), (-1.767, 0.3)],
        }
    }
}
