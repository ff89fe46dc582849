"""Monoidal categories with a dualizing object: the shared derived layer.

A concrete category instance only supplies a small set of primitives:

* objects (hashable presentations), the unit object, hom-space bases;
* the tensor product on objects with an explicit projection/section from the
  plain tensor product of underlying spaces (flat index (i,j) -> i*d2 + j);
* associator and unitors;
* the duality functor G on objects and morphisms, chosen so that G is a
  strict involution on presentations (G(G(x)) is literally x);
* the defining natural isomorphism pi: Hom(x (x) y, K) = Hom(x, G y).

Everything else — the second tensor product (#), its unitors/associator,
evaluations and coevaluations, the two side adjunctions, their counits, the
two distributors, the duality of the tensor products — is derived here once,
uniformly for every instance.

Notation used in docstrings: (x) is the first tensor product, (#) the second
one (x (#) y := G(Gy (x) Gx)), K = G(1) the dualizing object.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from ..linalg.matrices import Matrix, kron, split_surjection


class Obj:
    """An interned object of a category instance."""

    __slots__ = ("cat", "payload", "key", "dim")

    def __init__(self, cat, payload, key, dim):
        self.cat = cat
        self.payload = payload
        self.key = key
        self.dim = dim

    def __eq__(self, other):
        return isinstance(other, Obj) and self.cat is other.cat and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Obj(dim={self.dim})"


class Mor:
    """A morphism: an exact matrix between the underlying spaces of two
    interned objects."""

    __slots__ = ("cat", "src", "dst", "mat")

    def __init__(self, cat, src: Obj, dst: Obj, mat: Matrix):
        if mat.shape != (dst.dim, src.dim):
            raise ValueError(
                f"matrix shape {mat.shape} does not match {src.dim} -> {dst.dim}"
            )
        self.cat = cat
        self.src = src
        self.dst = dst
        self.mat = mat

    def __matmul__(self, other: "Mor") -> "Mor":
        """Composition self after other."""
        if other.dst != self.src:
            raise ValueError("morphisms are not composable")
        return Mor(self.cat, other.src, self.dst, self.mat @ other.mat)

    def __add__(self, other: "Mor") -> "Mor":
        return Mor(self.cat, self.src, self.dst, self.mat + other.mat)

    def __sub__(self, other: "Mor") -> "Mor":
        return Mor(self.cat, self.src, self.dst, self.mat - other.mat)

    def scale(self, c) -> "Mor":
        return Mor(self.cat, self.src, self.dst, self.mat.scale(c))

    def __eq__(self, other):
        return (
            isinstance(other, Mor)
            and self.src == other.src
            and self.dst == other.dst
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.src.key, self.dst.key, self.mat.key()))

    def inv(self) -> "Mor":
        return Mor(self.cat, self.dst, self.src, self.mat.invert())

    def is_iso(self) -> bool:
        return self.mat.is_invertible()

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def __repr__(self):
        return f"Mor({self.src.dim} -> {self.dst.dim})"


class GVCategory(ABC):
    """Base class for concrete monoidal categories with a dualizing object."""

    def __init__(self, field):
        self.field = field
        self._objects: dict = {}
        self._memo: dict = {}

    # ---------------------------------------------------------------- utils

    def obj(self, payload) -> Obj:
        key = self._payload_key(payload)
        cached = self._objects.get(key)
        if cached is None:
            cached = Obj(self, payload, key, self._payload_dim(payload))
            self._objects[key] = cached
        return cached

    def _cached(self, tag, *keys):
        return self._memo.get((tag,) + keys)

    def _store(self, tag, *keys_and_value):
        *keys, value = keys_and_value
        self._memo[(tag,) + tuple(keys)] = value
        return value

    def id(self, x: Obj) -> Mor:
        return Mor(self, x, x, Matrix.identity(self.field, x.dim))

    def mor(self, src: Obj, dst: Obj, mat: Matrix) -> Mor:
        return Mor(self, src, dst, mat)

    # ------------------------------------------------------- primitives

    @abstractmethod
    def _payload_key(self, payload):
        ...

    @abstractmethod
    def _payload_dim(self, payload) -> int:
        ...

    @abstractmethod
    def _unit_payload(self):
        ...

    @abstractmethod
    def _hom_basis(self, x: Obj, y: Obj) -> list[Matrix]:
        ...

    @abstractmethod
    def _tensor_payload(self, x: Obj, y: Obj):
        ...

    @abstractmethod
    def _tensor_proj_mat(self, x: Obj, y: Obj) -> Matrix:
        ...

    def _tensor_sect_mat(self, x: Obj, y: Obj) -> Matrix:
        return split_surjection(self._tensor_proj_mat(x, y))

    @abstractmethod
    def _associator_mat(self, x: Obj, y: Obj, z: Obj) -> Matrix:
        ...

    def _associator_inv_mat(self, x: Obj, y: Obj, z: Obj) -> Matrix:
        """Inverse associator matrix; instances override this with a direct
        construction because generic inversion is cubic in the tensor dim."""
        return self._associator_mat(x, y, z).invert()

    @abstractmethod
    def _unitor_l_mat(self, x: Obj) -> Matrix:
        ...

    @abstractmethod
    def _unitor_r_mat(self, x: Obj) -> Matrix:
        ...

    @abstractmethod
    def _G_payload(self, x: Obj):
        ...

    @abstractmethod
    def _G_mat(self, f: Mor) -> Matrix:
        ...

    @abstractmethod
    def _pi_mat(self, x: Obj, y: Obj, mat: Matrix) -> Matrix:
        ...

    @abstractmethod
    def _pi_inv_mat(self, x: Obj, y: Obj, mat: Matrix) -> Matrix:
        ...

    # ------------------------------------------------- first tensor product

    def unit(self) -> Obj:
        cached = self._cached("unit")
        return cached if cached is not None else self._store("unit", self.obj(self._unit_payload()))

    def tensor(self, x: Obj, y: Obj) -> Obj:
        cached = self._cached("tensor", x.key, y.key)
        if cached is None:
            cached = self._store("tensor", x.key, y.key, self.obj(self._tensor_payload(x, y)))
        return cached

    def tensor_proj(self, x: Obj, y: Obj) -> Matrix:
        cached = self._cached("tproj", x.key, y.key)
        if cached is None:
            cached = self._store("tproj", x.key, y.key, self._tensor_proj_mat(x, y))
        return cached

    def tensor_sect(self, x: Obj, y: Obj) -> Matrix:
        cached = self._cached("tsect", x.key, y.key)
        if cached is None:
            cached = self._store("tsect", x.key, y.key, self._tensor_sect_mat(x, y))
        return cached

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        """f (x) g, computed through the projection/section presentation."""
        src = self.tensor(f.src, g.src)
        dst = self.tensor(f.dst, g.dst)
        mat = self.tensor_proj(f.dst, g.dst) @ kron(f.mat, g.mat) @ self.tensor_sect(f.src, g.src)
        return Mor(self, src, dst, mat)

    def associator(self, x: Obj, y: Obj, z: Obj) -> Mor:
        cached = self._cached("assoc", x.key, y.key, z.key)
        if cached is None:
            src = self.tensor(self.tensor(x, y), z)
            dst = self.tensor(x, self.tensor(y, z))
            cached = self._store(
                "assoc", x.key, y.key, z.key, Mor(self, src, dst, self._associator_mat(x, y, z))
            )
        return cached

    def associator_inv(self, x: Obj, y: Obj, z: Obj) -> Mor:
        cached = self._cached("assocInv", x.key, y.key, z.key)
        if cached is None:
            src = self.tensor(x, self.tensor(y, z))
            dst = self.tensor(self.tensor(x, y), z)
            cached = self._store(
                "assocInv",
                x.key,
                y.key,
                z.key,
                Mor(self, src, dst, self._associator_inv_mat(x, y, z)),
            )
        return cached

    def unitor_l(self, x: Obj) -> Mor:
        cached = self._cached("unl", x.key)
        if cached is None:
            cached = self._store(
                "unl", x.key, Mor(self, self.tensor(self.unit(), x), x, self._unitor_l_mat(x))
            )
        return cached

    def unitor_r(self, x: Obj) -> Mor:
        cached = self._cached("unr", x.key)
        if cached is None:
            cached = self._store(
                "unr", x.key, Mor(self, self.tensor(x, self.unit()), x, self._unitor_r_mat(x))
            )
        return cached

    def hom_basis(self, x: Obj, y: Obj) -> list[Matrix]:
        cached = self._cached("hom", x.key, y.key)
        if cached is None:
            cached = self._store("hom", x.key, y.key, self._hom_basis(x, y))
        return cached

    # ------------------------------------------------------------- duality

    def G(self, x: Obj) -> Obj:
        cached = self._cached("G", x.key)
        if cached is None:
            cached = self._store("G", x.key, self.obj(self._G_payload(x)))
        return cached

    # G is a strict involution on presentations, so its inverse is itself.
    G_inv = G

    def K(self) -> Obj:
        return self.G(self.unit())

    def G_mor(self, f: Mor) -> Mor:
        return Mor(self, self.G(f.dst), self.G(f.src), self._G_mat(f))

    G_inv_mor = G_mor

    def pi(self, x: Obj, y: Obj, f: Mor) -> Mor:
        """Hom(x (x) y, K) -> Hom(x, G y)."""
        if f.src != self.tensor(x, y) or f.dst != self.K():
            raise ValueError("pi expects a morphism x (x) y -> K")
        return Mor(self, x, self.G(y), self._pi_mat(x, y, f.mat))

    def pi_inv(self, x: Obj, y: Obj, f: Mor) -> Mor:
        """Hom(x, G y) -> Hom(x (x) y, K)."""
        if f.src != x or f.dst != self.G(y):
            raise ValueError("pi_inv expects a morphism x -> G y")
        return Mor(self, self.tensor(x, y), self.K(), self._pi_inv_mat(x, y, f.mat))

    def pi_prime(self, x: Obj, y: Obj, f: Mor) -> Mor:
        """Hom(x (x) y, K) -> Hom(y, G x), the twin of pi through G."""
        return self.G_mor(self.pi(x, y, f))

    def pi_prime_inv(self, x: Obj, y: Obj, g: Mor) -> Mor:
        """Hom(y, G x) -> Hom(x (x) y, K)."""
        return self.pi_inv(x, y, self.G_mor(g))

    # ------------------------------------------------ second tensor product

    def cotensor(self, x: Obj, y: Obj) -> Obj:
        """x (#) y = G(Gy (x) Gx)."""
        return self.G(self.tensor(self.G(y), self.G(x)))

    def cotensor_mor(self, f: Mor, g: Mor) -> Mor:
        """f (#) g = G(G(g) (x) G(f))."""
        return self.G_mor(self.tensor_mor(self.G_mor(g), self.G_mor(f)))

    def counitor_l(self, x: Obj) -> Mor:
        """K (#) x -> x, the (#)-unitor, as G of the inverse (x)-unitor."""
        return self.G_mor(self.unitor_r(self.G(x)).inv())

    def counitor_r(self, x: Obj) -> Mor:
        """x (#) K -> x."""
        return self.G_mor(self.unitor_l(self.G(x)).inv())

    def coassociator(self, x: Obj, y: Obj, z: Obj) -> Mor:
        """(x (#) y) (#) z -> x (#) (y (#) z), as G of the (x)-associator."""
        return self.G_mor(self.associator(self.G(z), self.G(y), self.G(x)))

    # --------------------------------------------- evaluations/coevaluations

    def ev_r(self, y: Obj) -> Mor:
        """G y (x) y -> K."""
        return self.pi_inv(self.G(y), y, self.id(self.G(y)))

    def ev_l(self, y: Obj) -> Mor:
        """y (x) G y -> K."""
        return self.pi_inv(y, self.G(y), self.id(y))

    def coev_r(self, x: Obj) -> Mor:
        """1 -> x (#) G x."""
        return self.G_mor(self.ev_l(x))

    def coev_l(self, x: Obj) -> Mor:
        """1 -> G x (#) x."""
        return self.G_mor(self.ev_r(x))

    # ------------------------------------------------------ side adjunctions

    def adj1(self, x: Obj, y: Obj, z: Obj, f: Mor) -> Mor:
        """Hom(x (x) y, z) -> Hom(x, z (#) G y)."""
        phi = self.pi_inv(self.tensor(x, y), self.G(z), f)
        psi = phi @ self.associator_inv(x, y, self.G(z))
        return self.pi(x, self.tensor(y, self.G(z)), psi)

    def adj1_inv(self, x: Obj, y: Obj, z: Obj, g: Mor) -> Mor:
        """Hom(x, z (#) G y) -> Hom(x (x) y, z)."""
        psi = self.pi_inv(x, self.tensor(y, self.G(z)), g)
        phi = psi @ self.associator(x, y, self.G(z))
        f = self.pi(self.tensor(x, y), self.G(z), phi)
        return Mor(self, self.tensor(x, y), z, f.mat)

    def adj2(self, x: Obj, y: Obj, z: Obj, f: Mor) -> Mor:
        """Hom(x (x) y, z) -> Hom(y, G x (#) z)."""
        chi = self.pi_prime_inv(self.G(z), self.tensor(x, y), f)
        xi = chi @ self.associator(self.G(z), x, y)
        return self.pi_prime(self.tensor(self.G(z), x), y, xi)

    def adj2_inv(self, x: Obj, y: Obj, z: Obj, g: Mor) -> Mor:
        """Hom(y, G x (#) z) -> Hom(x (x) y, z)."""
        xi = self.pi_prime_inv(self.tensor(self.G(z), x), y, g)
        chi = xi @ self.associator_inv(self.G(z), x, y)
        f = self.pi_prime(self.G(z), self.tensor(x, y), chi)
        return Mor(self, self.tensor(x, y), z, f.mat)

    def counit_e(self, x: Obj, n: Obj) -> Mor:
        """G x (x) (x (#) n) -> n, the counit of the second side adjunction."""
        cached = self._cached("cue", x.key, n.key)
        if cached is None:
            xn = self.cotensor(x, n)
            cached = self._store(
                "cue", x.key, n.key, self.adj2_inv(self.G(x), xn, n, self.id(xn))
            )
        return cached

    def counit_e_prime(self, c: Obj, n: Obj) -> Mor:
        """(n (#) G c) (x) c -> n, the counit of the first side adjunction."""
        cached = self._cached("cueP", c.key, n.key)
        if cached is None:
            ngc = self.cotensor(n, self.G(c))
            cached = self._store(
                "cueP", c.key, n.key, self.adj1_inv(ngc, c, n, self.id(ngc))
            )
        return cached

    # ---------------------------------------------------------- distributors

    def dist_r(self, x: Obj, y: Obj, z: Obj) -> Mor:
        """(x (#) y) (x) z -> x (#) (y (x) z)."""
        cached = self._cached("distR", x.key, y.key, z.key)
        if cached is not None:
            return cached
        e = self.counit_e(x, y)
        g = self.tensor_mor(e, self.id(z)) @ self.associator_inv(
            self.G(x), self.cotensor(x, y), z
        )
        out = self.adj2(self.G(x), self.tensor(self.cotensor(x, y), z), self.tensor(y, z), g)
        out = Mor(self, out.src, self.cotensor(x, self.tensor(y, z)), out.mat)
        return self._store("distR", x.key, y.key, z.key, out)

    def dist_l(self, x: Obj, y: Obj, z: Obj) -> Mor:
        """x (x) (y (#) z) -> (x (x) y) (#) z."""
        cached = self._cached("distL", x.key, y.key, z.key)
        if cached is not None:
            return cached
        yz = self.cotensor(y, z)
        ep = self.counit_e_prime(self.G(z), y)
        f = self.tensor_mor(self.id(x), ep) @ self.associator(x, yz, self.G(z))
        out = self.adj1(self.tensor(x, yz), self.G(z), self.tensor(x, y), f)
        out = Mor(self, out.src, self.cotensor(self.tensor(x, y), z), out.mat)
        return self._store("distL", x.key, y.key, z.key, out)

    # ------------------------------------------------- duality as a functor

    def gamma(self, x: Obj, y: Obj) -> Mor:
        """G(x (x) y) -> G y (#) G x, the canonical comparison."""
        cached = self._cached("gamma", x.key, y.key)
        if cached is not None:
            return cached
        xy = self.tensor(x, y)
        t0 = self.pi_inv(self.G(xy), xy, self.id(self.G(xy)))
        t1 = t0 @ self.associator(self.G(xy), x, y)
        t2 = self.pi(self.tensor(self.G(xy), x), y, t1)
        out = self.adj1(self.G(xy), x, self.G(y), t2)
        out = Mor(self, self.G(xy), self.cotensor(self.G(y), self.G(x)), out.mat)
        return self._store("gamma", x.key, y.key, out)

    def G2_monoidal(self, x: Obj, y: Obj) -> Mor:
        """The canonical monoidal comparison G2(x) (x) G2(y) -> G2(x (x) y).

        With the strict-involution presentation both endpoints are the
        presentation x (x) y, so this is an automorphism (G applied to the
        comparison gamma); its monoidality is checked equationally in tests.
        """
        return self.G_mor(self.gamma(x, y))
