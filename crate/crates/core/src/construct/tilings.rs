use crate::error::{Error, Result};
use crate::geometry::{sorted_sides, PlacedTile, Point2, Tiling};
use crate::kernel::{QuadVal, Rational, SideLength};

/// Common discriminant of a set of points.
pub(crate) fn common_disc<'a>(points: impl IntoIterator<Item = &'a Point2>) -> Result<u64> {
    let mut d = 1;
    for p in points {
        let pd = p.disc();
        if pd != 1 {
            if d != 1 && d != pd {
                return Err(Error::MixedDiscriminant(d, pd));
            }
            d = pd;
        }
    }
    Ok(d)
}

/// Side lengths opposite the three vertices; squares must be rational.
pub(crate) fn triangle_sides(v: &[Point2; 3]) -> Result<[SideLength; 3]> {
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let sq = v[(i + 2) % 3].sub(&v[(i + 1) % 3]).norm_sq();
        let r = sq.as_rational().ok_or_else(|| {
            Error::InvalidInput(format!("squared side length {sq} is irrational"))
        })?;
        out.push(SideLength::from_square(r.clone())?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Triangle with the given sides: `(0,0)`, `(c,0)` and the apex above the x-axis.
///
/// `a` is opposite the origin and `b` opposite `(c, 0)`.
pub fn outer_from_sides(a: &SideLength, b: &SideLength, c: &SideLength) -> Result<[Point2; 3]> {
    let (a2, b2, c2) = (a.squared(), b.squared(), c.squared());
    let two = Rational::from(2);
    let k16 = &two * &(a2 * b2 + b2 * c2 + c2 * a2) - (a2.square() + b2.square() + c2.square());
    if !k16.is_positive() {
        return Err(Error::DegenerateTriangle(format!("sides {a}, {b}, {c}")));
    }
    let cq = c.to_quad();
    // x = (b^2 + c^2 - a^2) / (2c), y = 2K / c = sqrt(16 K^2) / (2c)
    let inv_2c = cq.scale(&two).recip()?;
    let x = QuadVal::from(b2 + c2 - a2).try_mul(&inv_2c)?;
    let y = QuadVal::sqrt_of(&k16)?.try_mul(&inv_2c)?;
    let apex = Point2::new(x, y)?;
    let pts = [Point2::origin(), Point2::new(cq, QuadVal::zero())?, apex];
    common_disc(pts.iter())?;
    Ok(pts)
}

/// Lattice points of the `n`-fold subdivision, `grid[i][j] = P + i u + j w`.
pub(crate) fn quadratic_tiles(outer: &[Point2; 3], n: u32) -> Vec<PlacedTile> {
    let [p, q, r] = outer;
    let inv = Rational::new(1, n).unwrap();
    let u = q.sub(p).scale(&inv);
    let w = r.sub(p).scale(&inv);
    let n = n as usize;
    let mut grid: Vec<Vec<Point2>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let base = p.add(&u.scale(&Rational::from(i as i64)));
        let mut row = Vec::with_capacity(n + 1 - i);
        let mut cur = base;
        for _ in 0..=(n - i) {
            row.push(cur.clone());
            cur = cur.add(&w);
        }
        grid.push(row);
    }
    let mut tiles = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..(n - i) {
            tiles.push(PlacedTile::unchecked([
                grid[i][j].clone(),
                grid[i + 1][j].clone(),
                grid[i][j + 1].clone(),
            ]));
            if i + j + 2 <= n {
                tiles.push(PlacedTile::unchecked([
                    grid[i + 1][j].clone(),
                    grid[i + 1][j + 1].clone(),
                    grid[i][j + 1].clone(),
                ]));
            }
        }
    }
    tiles
}

/// The outer triangle cut into `n^2` copies scaled by `1/n`.
pub fn quadratic_tiling(outer: [Point2; 3], n: u32) -> Result<Tiling> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let disc = common_disc(outer.iter())?;
    PlacedTile::new(outer[0].clone(), outer[1].clone(), outer[2].clone())?;
    let inv = Rational::new(1, n)?;
    let sides = triangle_sides(&outer)?.map(|s| s.scale(&inv).expect("positive"));
    let tiles = quadratic_tiles(&outer, n);
    Tiling::new(disc, sorted_sides(sides), outer, tiles)
}

/// Isosceles triangle with the given base and height, cut in half by its axis.
pub fn bisect_isosceles(base: &Rational, height: &SideLength) -> Result<Tiling> {
    if !base.is_positive() {
        return Err(Error::DegenerateTriangle(format!("base {base}")));
    }
    let h = height.to_quad();
    let half = base / &Rational::from(2);
    let apex = Point2::new(half.clone().into(), h)?;
    let foot = Point2::rational(half.clone(), Rational::zero());
    let right = Point2::rational(base.clone(), Rational::zero());
    let outer = [Point2::origin(), right.clone(), apex.clone()];
    let disc = common_disc(outer.iter())?;
    let sides = [
        SideLength::rational(half.clone())?,
        height.clone(),
        SideLength::from_square(half.square() + height.squared())?,
    ];
    let tiles = vec![
        PlacedTile::new(Point2::origin(), foot.clone(), apex.clone())?,
        PlacedTile::new(foot, right, apex)?,
    ];
    Tiling::new(disc, sorted_sides(sides), outer, tiles)
}

fn sqrt3() -> QuadVal {
    QuadVal::new(Rational::zero(), Rational::one(), 3).unwrap()
}

/// `(p sqrt 3, q)`
fn h3(p: Rational, q: Rational) -> Point2 {
    Point2::new(sqrt3().scale(&p), q.into()).unwrap()
}

/// Equilateral triangle of side `(k+1) sqrt 3` cut into `3(k+1)^2` copies of
/// the `(pi/6, pi/6, 2 pi/3)` triangle with sides `(1, 1, sqrt 3)`.
///
/// `1 + 2 + ... + k` hexagons of six tiles each sit in rows, with `k + 1`
/// tiles along each side of the triangle.
pub fn hexagonal_tiling(k: u32) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let r = |n: i64, d: i64| Rational::frac(n, d);
    let k1 = k as i64 + 1;
    let outer = [
        Point2::origin(),
        h3(k1.into(), Rational::zero()),
        h3(r(k1, 2), r(3 * k1, 2)),
    ];
    let mut tiles = Vec::with_capacity(3 * (k1 * k1) as usize);
    let border: Vec<PlacedTile> = (0..k1)
        .map(|i| {
            PlacedTile::unchecked([
                h3(i.into(), Rational::zero()),
                h3((i + 1).into(), Rational::zero()),
                h3(r(2 * i + 1, 2), r(1, 2)),
            ])
        })
        .collect();
    let centroid = h3(r(k1, 2), r(k1, 2));
    let cos = QuadVal::from(r(-1, 2));
    let sin = sqrt3().scale(&r(1, 2));
    let cos2 = cos.clone();
    let sin2 = -&sin;
    tiles.extend(border.iter().cloned());
    tiles.extend(
        border
            .iter()
            .map(|t| t.map(|p| p.rotate(&centroid, &cos, &sin))),
    );
    tiles.extend(
        border
            .iter()
            .map(|t| t.map(|p| p.rotate(&centroid, &cos2, &sin2))),
    );
    // hexagon vertices from the top, counterclockwise
    let offsets = [
        (r(0, 1), r(1, 1)),
        (r(-1, 2), r(1, 2)),
        (r(-1, 2), r(-1, 2)),
        (r(0, 1), r(-1, 1)),
        (r(1, 2), r(-1, 2)),
        (r(1, 2), r(1, 2)),
    ];
    for row in 0..k as i64 {
        for i in 0..(k as i64 - row) {
            let cx = r(row, 2) + Rational::from(i + 1);
            let cy = Rational::one() + r(3 * row, 2);
            let c = h3(cx.clone(), cy.clone());
            let v: Vec<Point2> = offsets
                .iter()
                .map(|(dx, dy)| h3(&cx + dx, &cy + dy))
                .collect();
            for (a, b) in [(1, 3), (3, 5), (5, 1)] {
                tiles.push(PlacedTile::unchecked([
                    c.clone(),
                    v[a].clone(),
                    v[b].clone(),
                ]));
            }
            for (a, b, e) in [(1, 2, 3), (3, 4, 5), (5, 0, 1)] {
                tiles.push(PlacedTile::unchecked([
                    v[a].clone(),
                    v[b].clone(),
                    v[e].clone(),
                ]));
            }
        }
    }
    let sides = [1, 1, 3].map(|s| SideLength::from_square(s.into()).unwrap());
    Tiling::new(3, sides, outer, tiles)
}

/// Right triangle with legs in ratio `M : K` cut into `M^2 + K^2` tiles with
/// legs `M`, `K` by the altitude to the hypotenuse.
pub fn biquadratic_tiling(m: u32, k: u32) -> Result<Tiling> {
    if m == 0 || k == 0 {
        return Err(Error::OutOfRange("M and K must be positive".into()));
    }
    let (m, k) = (m as i64, k as i64);
    let o = Point2::origin();
    let a = Point2::ints(m * m + k * k, 0);
    let v = Point2::ints(m * m, m * k);
    let f = Point2::ints(m * m, 0);
    let left = quadratic_tiling([o.clone(), f.clone(), v.clone()], m as u32)?;
    let right = quadratic_tiling([f, a.clone(), v.clone()], k as u32)?;
    let mut tiles = left.tiles;
    tiles.extend(right.tiles);
    let sides = [
        SideLength::rational(m.into())?,
        SideLength::rational(k.into())?,
        SideLength::from_square((m * m + k * k).into())?,
    ];
    Tiling::new(1, sorted_sides(sides), [o, a, v], tiles)
}

/// The `(pi/2, pi/3, pi/6)` triangle with legs `3`, `sqrt 3` cut into three
/// tiles with sides `(1, sqrt 3, 2)`, each then subdivided `k`-fold.
pub fn tri_306090_tiling(k: u32) -> Result<Tiling> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let r = |n: i64, d: i64| Rational::frac(n, d);
    let o = Point2::origin();
    let a = Point2::ints(3, 0);
    let b = Point2::new(QuadVal::zero(), sqrt3()).unwrap();
    let p = Point2::ints(1, 0);
    let f = Point2::new(r(3, 2).into(), sqrt3().scale(&r(1, 2))).unwrap();
    let base = [
        [o.clone(), p.clone(), b.clone()],
        [p.clone(), f.clone(), b.clone()],
        [p, a.clone(), f],
    ];
    let tiles: Vec<PlacedTile> = base.iter().flat_map(|t| quadratic_tiles(t, k)).collect();
    let inv = Rational::new(1, k)?;
    let sides =
        [1, 3, 4].map(|s| SideLength::from_square(Rational::from(s) * inv.square()).unwrap());
    Tiling::new(3, sides, [o, a, b], tiles)
}
