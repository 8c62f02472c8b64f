//! Printed condition lists in their LaTeX source form, one entry per
//! condition. Evaluated by [`super::evaluate`]; never edited to fix typos.

use super::Printed;

/// Bimodule conditions on `(▷, ◁)`.
pub const BIMODULE: &[Printed] = &[
    Printed {
        id: "bimod-1",
        equations: &[
            r#"(x \circ y) \trr v - x \trr (y\trr v) + (y \circ x) \trr v - y\trr (x \trr v) = 0,"#,
        ],
    },
    Printed {
        id: "bimod-2",
        equations: &[
            r#"(v \trl x) \trl y - v \trl (x \circ y) + (v \trl y) \trl x - v\trl (y \circ x) = 0,"#,
        ],
    },
    Printed {
        id: "bimod-3",
        equations: &[
            r#"v \trl (x \circ y) - (v \trl x) \trl y + x \trr (v \trl y) - (x \trr v) \trl y = 0,"#,
        ],
    },
    Printed {
        id: "bimod-4",
        equations: &[
            r#"(x \circ y) \trr v -x\trr(y\trr v)+(x\trr v)\trl y-x\trr(v \trr y)=0,"#,
        ],
    },
];

/// Pre-alternative bimodule conditions.
pub const PRE_BIMODULE: &[Printed] = &[
    Printed {
        id: "pbm-1",
        equations: &[
            r#"(x\circ y+ y\circ x)\succ v &=& x \succ(y\succ v)+
y \succ(x\succ v),"#,
        ],
    },
    Printed {
        id: "pbm-2",
        equations: &[
            r#"(x\circ v+ v\circ x)\succ y &=& x \succ(v\succ y)-  v \succ(x\succ y),"#,
        ],
    },
    Printed {
        id: "pbm-3",
        equations: &[
            r#"(v\prec x)\prec y + (x\succ v)\prec y &=& v \prec(x\circ y)+
x \succ(v\prec y),"#,
        ],
    },
    Printed {
        id: "pbm-4",
        equations: &[
            r#"(x\prec v)\prec y + (v\succ x)\prec y &=& x \prec(v\circ y)+
v \succ(x\circ y),"#,
        ],
    },
    Printed {
        id: "pbm-5",
        equations: &[
            r#"(y\prec x)\prec v + (x\succ y)\prec v &=& y \prec(x\circ v)+
x \succ(y\prec v),"#,
        ],
    },
    Printed {
        id: "pbm-6",
        equations: &[
            r#"(y\succ v)\prec x + (y\circ x)\succ v &=& y \succ(v\prec x)
+  y \succ(x\succ v),"#,
        ],
    },
    Printed {
        id: "pbm-7",
        equations: &[
            r#"(v\succ)\prec x + (v\circ x)\succ y &=& v \succ(y\prec x)+
v \succ(x\succ y),"#,
        ],
    },
    Printed {
        id: "pbm-8",
        equations: &[
            r#"(y\succ x)\prec v + (y\circ v)\succ x &=& y \succ(x\prec v)+
y \succ(v\succ x),"#,
        ],
    },
    Printed {
        id: "pbm-9",
        equations: &[
            r#"(v\prec x)\prec y + (v\prec y)\prec x &=& v \prec(x\circ y+ y\circ x),"#,
        ],
    },
    Printed {
        id: "pbm-10",
        equations: &[
            r#"(x\prec v)\prec y +(x\prec y)\prec v &=& x \prec(v\circ y+y\circ v),"#,
        ],
    },
];

/// Conditions A1–A19 for the unified product.
pub const UNIFIED: &[Printed] = &[
    Printed {
        id: "A1",
        equations: &[
            r#"&&
(u \ppr x) \circ z + (x \ppl u) \circ z + (u \trl x) \ppr z + (x \trr u) \ppr z \\
&=& u \ppr (x \circ z) + x \circ (u \ppr z) + x\ppl (u \trl z),"#,
        ],
    },
    Printed {
        id: "A2",
        equations: &[
            r#"(u \trl x) \trl z + (x\trr u) \trl z= u \trl (x \circ z) + x \trr (u \trl z),"#,
        ],
    },
    Printed {
        id: "A3",
        equations: &[
            r#"&&
\omega (u,v) \circ z + \omega (v,u) \circ z + (u * v) \ppr z + (v * u) \ppr z \\
&=& u \ppr (v \ppr z) + v \ppr (u \ppr z) + \omega(u,v \trl z) + \omega (v,u \trl z),"#,
        ],
    },
    Printed {
        id: "A4",
        equations: &[
            r#"&&
(u * v) \trl z + (v * u)\trl z \\
&=& u * (v \trl z) + v * (u \trl z) + u \trl (v \ppr z) + v \trl (u \ppr z),"#,
        ],
    },
    Printed {
        id: "A5",
        equations: &[
            r#"&&
(u \ppr x) \ppl w + (x \ppl u)\ppl w + \omega (u \trl x,w) + \omega (x \trr u,w) \\
&=& u \ppr (x \ppl w) + x \ppl (u * w) + x \circ (\omega (u,w)) + \omega(u,x \trr w),"#,
        ],
    },
    Printed {
        id: "A6",
        equations: &[
            r#"&&
(u \trl x) * w + (x \trr u) * w + (u \ppr x) \trr w + (x\ppl u) \trr w \\
&=& u * (x \trr w) + u \trl (x\ppl w) + x \trr (u * w),"#,
        ],
    },
    Printed {
        id: "A7",
        equations: &[
            r#"&&
(x \circ y) \ppl w + (y \circ x)\ppl w \\
&=& x \circ (y \ppl w) + y \circ (x \ppl w) + x \ppl (y \trr w) + y \ppl(x \trr w),"#,
        ],
    },
    Printed {
        id: "A8",
        equations: &[
            r#"(x \circ y) \trr w + (y \circ x)\trr w = x \trr (y \trr w) + y\trr (x \trr w),"#,
        ],
    },
    Printed {
        id: "A9",
        equations: &[
            r#"&&
\omega (u,v) \ppl w +\omega (v,u) \ppl w + \omega (u * v,w)+ \omega (v * u,w) \\
&=& u \ppr \omega (v,w) + v \ppr \omega (u,w) + \omega (u,v * w) + \omega (v,u * w),"#,
        ],
    },
    Printed {
        id: "A10",
        equations: &[
            r#"&&
(u * v) * w + (v * u) * w + \omega (u,v) \trr w + (\omega (v,u)) \trr w \\
&=& u * (v * w) + v * (u * w) + u \trl(\omega (v,w)) + v \trl (\omega (u,w)),"#,
        ],
    },
    Printed {
        id: "A11",
        equations: &[
            r#"&&
(u \ppr y) \circ z + (u \trl y) \ppr z+ (u \ppr z) \circ y + (u \trl z) \ppr y \\
&=& u \ppr (y \circ z) + u \ppr (z \circ y),"#,
        ],
    },
    Printed {
        id: "A12",
        equations: &[
            r#"(u \trl y) \trl z + (u \trl z) \trl y = u \trl (y \circ z) + u\trl (z \circ y),"#,
        ],
    },
    Printed {
        id: "A13",
        equations: &[
            r#"&&
(x \ppl v) \circ y + (x \trr v) \ppr y + (x \circ y) \ppl v \\
&=& x \circ (v \ppr y) + x \ppl (v \trl y) + x \circ (y \ppl v) + x \ppl (y \trr v),"#,
        ],
    },
    Printed {
        id: "A14",
        equations: &[
            r#"(x \trr v) \trl y + (x \circ y) \trr v = x \trr (v \trl y) + x \trr (y \trr v),"#,
        ],
    },
    Printed {
        id: "A15",
        equations: &[
            r#"&&
(u * v) \ppr y + (u \ppr y) \ppl v +\omega (u \trl y,v) + (\omega (u,v)) \circ y \\
&=& u \ppr (v \ppr y) + u \ppr (y \ppl v) +\omega (u,y \trr v) + \omega (u,v\trl y),"#,
        ],
    },
    Printed {
        id: "A16",
        equations: &[
            r#"&&
(u * v) \trl y + (u \trl y)* v + (u \ppr y) \trr v \\
&=& u * (v \trl y) + u * (y \trr v) + u \trl (y \ppl v) + u \trl(v \ppr y),"#,
        ],
    },
    Printed {
        id: "A17",
        equations: &[
            r#"&&
(x \ppl v) \ppl w + (x \ppl w) \ppl v + \omega (x \trr w,v) + \omega(x \trr v,w) \\
&=& x \circ \omega (w,v) + x \circ \omega (v,w) + x \ppl (w * v)+ x \ppl (v * w),"#,
        ],
    },
    Printed {
        id: "A18",
        equations: &[
            r#"&&
(x \trr v) * w + (x \trr w) * v + (x \ppl w) \trr v + (x\ppl v) \trr w \\
&=& x \trr (w * v) + x \trr (v * w),"#,
        ],
    },
    Printed {
        id: "A19",
        equations: &[
            r#"&&
(u * v) * w + (u * w) * v + (\omega(u,v)) \trr w + (\omega (u,w)) \trr v \\
&=& u * (v * w) + u * (w * v) + u \trl(\omega (v,w)) + u \trl (\omega (w,v))."#,
        ],
    },
];

/// Conditions on a morphism pair `(r, s)`.
pub const MORPHISM: &[Printed] = &[
    Printed {
        id: "morph-1",
        equations: &[
            r#"{s}(u \trl x) &=& {s}(u)\trl ' x,"#,
        ],
    },
    Printed {
        id: "morph-2",
        equations: &[
            r#"{s}(x \trr u) &=& x \trr ' {s}(u),"#,
        ],
    },
    Printed {
        id: "morph-3",
        equations: &[
            r#"{s}(u \ast v) &=& r(u) \trr ' {s}(v) + {s}(u)\trl' r(v) + {s}(u) \circ ' {s}(v),"#,
        ],
    },
    Printed {
        id: "morph-4",
        equations: &[
            r#"r(u \trl x) &=& r(u)x - u \ppr x +s(u) \ppr ' x,"#,
        ],
    },
    Printed {
        id: "morph-5",
        equations: &[
            r#"r(x \ppl u) &=& x\circ r(u) - x\ppl u + x \ppl ' v(u),"#,
        ],
    },
    Printed {
        id: "morph-6",
        equations: &[
            r#"\notag r(u \ast v) &=& r(u)\circ r(v) + \omega' ({s}(u),\, {s}(v))

&&- \omega(u,\, v) + r(u) \ppl ' {s}(v) + {s}(u) \ppr ' r(v),"#,
        ],
    },
];

/// Conditions for two datums to be equivalent via `(r, s)`.
pub const EQUIVALENCE: &[Printed] = &[
    Printed {
        id: "equiv-1",
        equations: &[
            r#"u \trl x ={s}^{-1}({s}(u)\trl' x),"#,
        ],
    },
    Printed {
        id: "equiv-2",
        equations: &[
            r#"x \trr u ={s}^{-1}( x \trr' {s}(u)),"#,
        ],
    },
    Printed {
        id: "equiv-3",
        equations: &[
            r#"u \circ v = {s}^{-1}(r(u) \trr ' {s}(v) + {s}(u)\trl' r(v) + {s}(u) \circ ' {s}(v)),"#,
        ],
    },
    Printed {
        id: "equiv-4",
        equations: &[
            r#"u \trl x = r^{-1}(r(u)x - u \ppr x + v(u) \ppr ' x),"#,
        ],
    },
    Printed {
        id: "equiv-5",
        equations: &[
            r#"x \ppl u = r^{-1}(xr(u) - x\ppl u + x \ppl ' s(u)),"#,
        ],
    },
    Printed {
        id: "equiv-6",
        equations: &[
            r#"u \circ v = r^{-1}(r(u)r(v) + \omega ' ({s}(u),\, {s}(v)) - \omega(u,\, v) + r(u) \ppl ' {s}(v) + {s}(u) \trr ' r(v)),"#,
        ],
    },
];

/// Conditions for two datums to be cohomologous via `(r, id)`.
pub const COHOMOLOGY: &[Printed] = &[
    Printed {
        id: "cohom-1",
        equations: &[
            r#"u \ppr x &=& r(u)\cdot x + u \ppr ' x - r(u \trl ' x),"#,
        ],
    },
    Printed {
        id: "cohom-2",
        equations: &[
            r#"x \ppl u &=& x\cdot r(u) + x \ppl ' u - r(x \trr ' u),"#,
        ],
    },
    Printed {
        id: "cohom-3",
        equations: &[
            r#"u \ast v &=& r(u) \trr ' v + u \trl ' r(v) + u \ast' v,"#,
        ],
    },
    Printed {
        id: "cohom-4",
        equations: &[
            r#"\omega(u,\, v) &=& r(u)\cdot r(v) + r(u) \ppl ' v + u
\ppr ' r(v) + \omega' (u, \, v)
&&-r \bigl(r(u)
\trr ' v + u \trl ' r(v) + u \ast' v\bigl)."#,
        ],
    },
];

/// Crossed system conditions.
pub const CROSSED: &[Printed] = &[
    Printed {
        id: "crossed-1",
        equations: &[
            r#"(u \ppr x) \circ z + (x \ppl u) \circ z= u \ppr (x \circ z) + x \circ (u \ppr z)"#,
        ],
    },
    Printed {
        id: "crossed-2",
        equations: &[
            r#"(x \circ y) \ppl w + (y \circ x)\ppl w= x \circ (y \ppl w) + y \circ (x \ppl w),"#,
        ],
    },
    Printed {
        id: "crossed-3",
        equations: &[
            r#"(u \ppr y) \circ z + (u \ppr z) \circ y= u \ppr (y \circ z) + u \ppr (z \circ y),"#,
        ],
    },
    Printed {
        id: "crossed-4",
        equations: &[
            r#"(x \ppl v) \circ y  + (x \circ y) \ppl v= x \circ (v \ppr y)  + x \circ (y \ppl v),"#,
        ],
    },
    Printed {
        id: "crossed-5",
        equations: &[
            r#"\notag&& (u \ppr x) \ppl w + (x \ppl u)\ppl w\\
&=& u \ppr (x \ppl w) + x \ppl (u * w) + x \circ \omega (u,w),"#,
        ],
    },
    Printed {
        id: "crossed-6",
        equations: &[
            r#"\notag&&u \ppr (v \ppr y) + u \ppr (y \ppl v)  \\
&=&  (u * v) \ppr y + (u \ppr y) \ppl v + \omega (u,v) \circ y ,"#,
        ],
    },
    Printed {
        id: "crossed-7",
        equations: &[
            r#"\notag&& (x \ppl v) \ppl w + (x \ppl w) \ppl v  \\
&=&x \circ \omega (w,v) + x \circ \omega(v,w)+ x \ppl (w * v)+ x \ppl (v * w),"#,
        ],
    },
    Printed {
        id: "crossed-8",
        equations: &[
            r#"\notag&& u \ppr (v \ppr z) + v \ppr (u \ppr z) \\
&=& \omega (u,v) \circ z + \omega (v,u) \circ z + (u * v) \ppr z + (v * u) \ppr z,"#,
        ],
    },
    Printed {
        id: "crossed-9",
        equations: &[
            r#"\notag&& \omega (u,v) \ppl w + (\omega (v,u)) \ppl w + \omega (u * v,w) + \omega (v * u,w)\\
&=& u \ppr \omega (v,w) + v \ppr \omega (u,w) + \omega (u,v * w) + \omega (v,u * w),"#,
        ],
    },
];

/// Matched pair conditions.
pub const MATCHED: &[Printed] = &[
    Printed {
        id: "matched-1",
        equations: &[
            r#"\notag&&\left( {x \trr u + u \trl x} \right)\ppr y +
(u \ppr x + x \ppl u) \circ y

&&\qquad= u \ppr (x \circ y) + x \ppl (u
\trl y) + x \circ (y \ppl u),\qquad"#,
        ],
    },
    Printed {
        id: "matched-2",
        equations: &[
            r#"\notag&&
(x \circ y + y \circ x) \ppl u

&&\qquad= x \ppl (y \trr u) + x
\circ (y \ppl u) + y \ppl (x \trr u) + y \circ (x
\ppl u),\qquad"#,
        ],
    },
    Printed {
        id: "matched-3",
        equations: &[
            r#"\notag&&
(x \circ y) \ppl u + (x \trr u) \ppr y + (x \ppl u)
\circ y

&&\qquad= x \ppl (u \trl y + y \trr u) + x \circ (u
\ppr y + y \ppl u),\qquad"#,
        ],
    },
    Printed {
        id: "matched-4",
        equations: &[
            r#"\notag&&u \ppr (x \circ y + y \circ x)

&&\qquad= (u \ppr x) \circ y + (u \trl x) \ppr
y + (u \ppr y) \circ x + (u \trl y) \ppr x,\qquad"#,
        ],
    },
    Printed {
        id: "matched-5",
        equations: &[
            r#"\notag&&(u \ppr x + x \ppl u) \trr v + (x \trr u + u
\trl x) * v

&&\qquad= x \trr (u * v) + u \trl (x
\ppl v) + u * (x \trr v),\qquad"#,
        ],
    },
    Printed {
        id: "matched-6",
        equations: &[
            r#"\notag&&(u * v + v * u) \trl x

&&\qquad= u \trl (v \ppr x) + u * (v
\trl x) + v \trl (u \ppr x) + v * (u \trl x),\qquad"#,
        ],
    },
    Printed {
        id: "matched-7",
        equations: &[
            r#"\notag&&(u * v) \trl x + (u \ppr x) \trr v + (u \trl x) *
v

&&\qquad= x \trl (v \ppl x + x \ppr v) + u * (v \trr x + x
\trl v),\qquad"#,
        ],
    },
    Printed {
        id: "matched-8",
        equations: &[
            r#"\notag&& x \trr (u * v + v * u)

&&\qquad= (x \trr u) * v + (x \ppl
u) \trr v + (x \trr v) * u + (x \ppl v)
\trr u"#,
        ],
    },
];

/// Deformation map condition.
pub const DEFORMATION: &[Printed] = &[
    Printed {
        id: "deformation",
        equations: &[
            r#"{r}(u\circ v)-{r}(u)\circ {r}(v)=u\ppr {r}(v)+{r}(u)\ppl v-{r}({r}(u)\trr v+u\trl {r}(v))."#,
        ],
    },
];

/// Equivalence of deformation maps via `σ`.
pub const SIGMA_EQUIVALENCE: &[Printed] = &[
    Printed {
        id: "sigma-equiv",
        equations: &[
            r#"&&\sigma \bigl(u\cdot v\bigl) -\sigma(u)\cdot \sigma(v)\\
&=& \sigma(u) \trl r' \bigl(\sigma(v)\bigl) + r'\bigl(\sigma(u)\bigl) \ppr \sigma(v) - \sigma\bigl(u\trl r(v)\bigl) - \sigma \bigl(r(u) \trr v\bigl)."#,
        ],
    },
];

/// Flag datum conditions C1–C13.
pub const FLAG: &[Printed] = &[
    Printed {
        id: "C1",
        equations: &[
            r#"\mu ( {D( x )} ) = 0,\quad\lambda ( {T( x )} ) = 0,"#,
        ],
    },
    Printed {
        id: "C2",
        equations: &[
            r#"T( {x_0 } ) = D( {x_0 } ),\quad\lambda ( {x_0 } ) = \mu ( {x_0 } ),"#,
        ],
    },
    Printed {
        id: "C3",
        equations: &[
            r#"\mu ( {x \circ y} ) = \mu ( x )\mu ( y ),\quad
\lambda ( {x \circ y} ) = \lambda ( x )\lambda (y ),"#,
        ],
    },
    Printed {
        id: "C4",
        equations: &[
            r#"D^2( x ) + \mu ( x )x_0 = x_0 \circ x + k_0 D( x),"#,
        ],
    },
    Printed {
        id: "C5",
        equations: &[
            r#"T^2( x ) + \lambda ( x )x_0 = x \circ x_0 + k_0T( x )_0 ,"#,
        ],
    },
    Printed {
        id: "C6",
        equations: &[
            r#"\mu ( x )k_0 + \lambda ( {D( x )} ) =\lambda ( x )k_0 + \mu ( {T( x )} ) + \nu( {D( x )} ),"#,
        ],
    },
    Printed {
        id: "C7",
        equations: &[
            r#"\lambda ( x )k_0 + \mu ( {T( x )} ) = \nu( x )k_0 + \lambda ( {D( x )} ) + \lambda( {T( x )} ),"#,
        ],
    },
    Printed {
        id: "C8",
        equations: &[
            r#"\notag&& x \circ D( y ) + \mu ( y )T( x ) + D({x \circ y} ) \\
&=&  D( x ) \circ y + T( x ) \circ y + \mu ( x)D( y ) + \lambda ( x )D( y ),"#,
        ],
    },
    Printed {
        id: "C9",
        equations: &[
            r#"\notag&& T( x ) \circ y + \lambda ( x )D( y ) +T( {x \circ y} ) \\
&=& x \circ D( y ) + \mu ( y )T( x ) + x\circ T( y ) + \lambda ( y )T( x ),"#,
        ],
    },
    Printed {
        id: "C10",
        equations: &[
            r#"T( {x \circ y} + {y \circ x} ) =  x \circ T( y ) + y \circ T( x ) + \lambda ( y)T( x ) + \lambda ( x )T( y ),"#,
        ],
    },
    Printed {
        id: "C11",
        equations: &[
            r#"D( {x \circ y} + {y \circ x} ) = D( x ) \circ y + D( y ) \circ x + \mu ( x
)D( y ) + \mu ( y )D( x ),"#,
        ],
    },
    Printed {
        id: "C12",
        equations: &[
            r#"T^2( x ) + T( {D( x )} ) + \mu ( x)x_0 = D( {T( x )} ) + k_0 T( x ) + x\circ x_0 ,"#,
        ],
    },
    Printed {
        id: "C13",
        equations: &[
            r#"D^2( x ) + D( {T( x )} ) + \lambda ( x)x_0 = k_0 D( x ) + T( {D( x )} ) +x_0 \circ x."#,
        ],
    },
];

/// Pre-alternative flag datum conditions P1–P11.
pub const PRE_FLAG: &[Printed] = &[
    Printed {
        id: "P1",
        equations: &[
            r#"T_ > (x_0 ) = D_ > (x_0 ) + D_ > (y_0 ) + l_0 x_0 , ,"#,
        ],
    },
    Printed {
        id: "P2",
        equations: &[
            r#"\mu_\succ (x_0 ) = l_0 k_0 + \lambda_\succ (x_0 ) + \lambda_\succ (y_0),"#,
        ],
    },
    Printed {
        id: "P3",
        equations: &[
            r#"D_\diamond (x) \succ y + T_\diamond (x) \succ y + \mu_\circ (x)T_> (y) + \lambda_\circ (x)T_ > (y) \\
= \mu_\succ (y)T_ > (x) + T_ > (x \succ y) + x \succ T_ > (y)."#,
        ],
    },
    Printed {
        id: "P4",
        equations: &[
            r#"\mu_\succ (y)\mu_\circ (x) + \lambda_\prec (x)\mu_\succ (y) = \mu_\succ (x \succ y),"#,
        ],
    },
    Printed {
        id: "P5",
        equations: &[
            r#"D_ > (T_\diamond (x)) + D_ > (D_\diamond (x)) + \mu_\circ (x)x_0 +\lambda_\prec (x)x_0 = k_0 D_ > (x) + T_ > (D_ > (x)) + x \succ x_0 ,"#,
        ],
    },
    Printed {
        id: "P6",
        equations: &[
            r#"\lambda_\succ (D_\diamond (x)) + \lambda_\succ (T_\diamond (x))+ \lambda_\prec (x)k_0 + \mu_\circ (x)k_0 = \lambda_\succ (x)k_0 + \mu_ \succ (D_ > (x)),"#,
        ],
    },
    Printed {
        id: "P7",
        equations: &[
            r#"D_ > (x \circ y) + D_ > (y \circ x) = \lambda { }_ \succ (y)D_ > (x) +\lambda { }_ \succ (x)D_ > (y) + y \succ D_ > (x) + x \succ D_ > (y),"#,
        ],
    },
    Printed {
        id: "P8",
        equations: &[
            r#"\lambda_\succ (x \circ y) + \lambda_\succ (y \circ x) = 2\lambda_\succ(y)\lambda_\succ (x),"#,
        ],
    },
    Printed {
        id: "P9",
        equations: &[
            r#"(k_0 + l_0 )T_ > (x) + (k_0 + l_0 )x_0 \succ x + (k_0 + l_0 )y_0 \succ x =T_ > (T_ > (x)) + \mu_\succ (x)x_0 ,"#,
        ],
    },
    Printed {
        id: "P10",
        equations: &[
            r#"l_0 \mu_\succ (x) = \mu_\succ (T_ > (x)),"#,
        ],
    },
    Printed {
        id: "P11",
        equations: &[
            r#"D_ < (y_0 ) = k_0 y_0 + T_ < (x_0 ) + T_ < (y_0 ),"#,
        ],
    },
];

/// Pre-alternative matched pair conditions.
pub const PRE_MATCHED: &[Printed] = &[
    Printed {
        id: "pre-matched-1",
        equations: &[
            r#"\notag&& (x\diamond u) \succ y + (u\diamond x) \succ y + (u \circ x) > y +(x \circ u) > y \\
&=& x > (u \succ y) + u > (x \succ y) + x \succ (u > y),"#,
        ],
    },
    Printed {
        id: "pre-matched-2",
        equations: &[
            r#"(u \circ x) \succ y + (x \circ u) \succ y = x \succ (u \succ y) + u \succ (x
\succ y),"#,
        ],
    },
    Printed {
        id: "pre-matched-3",
        equations: &[
            r#"(x\diamond u) > v + (u\diamond x) > v = x > (u > v) + u > (x > v),"#,
        ],
    },
    Printed {
        id: "pre-matched-4",
        equations: &[
            r#"\notag&& (x\diamond u) \succ v + (u\diamond x) \succ v + (x \circ u) > v +(u \circ x) > v \\
&=& x \succ (u > v) + u > (x \succ v) + u \succ (x > v) ,"#,
        ],
    },
    Printed {
        id: "pre-matched-5",
        equations: &[
            r#"\notag&& (x \circ y) > u + (y \circ x) > u \\
&=&x > (y \succ u) + y > (x \succ u) + y\succ (x > u) + x \succ (y > u),"#,
        ],
    },
    Printed {
        id: "pre-matched-6",
        equations: &[
            r#"(x \circ y) \succ u + (y \circ x) \succ u = x \succ (y \succ u) + y \succ (x\succ u),"#,
        ],
    },
    Printed {
        id: "pre-matched-7",
        equations: &[
            r#"(v\diamond u) > x + (u\diamond v) > x = u > (v > x) + v > (u > x),"#,
        ],
    },
    Printed {
        id: "pre-matched-8",
        equations: &[
            r#"\notag&&(u\diamond v) \succ x + (v\diamond u) \succ x\\
&=& v \succ (u > x) + u\succ (v > x) + u > (v \succ x) + v > (u \succ x),"#,
        ],
    },
    Printed {
        id: "pre-matched-9",
        equations: &[
            r#"\notag&& x \prec (y\diamond u) + x \prec (u\diamond y) + x < (y \circ u) + x< (u \circ y) \\
&=&  (x \prec u) < y + (x \prec y) < u + (x < u) \prec y,"#,
        ],
    },
    Printed {
        id: "pre-matched-10",
        equations: &[
            r#"x \prec (u \circ y) + x \prec (y \circ u) = (x \prec u) \prec y + (x \prec y) \prec u,"#,
        ],
    },
    Printed {
        id: "pre-matched-11",
        equations: &[
            r#"\notag&& u < (y \circ x) + u < (x \circ y) \\
&&\qquad=  (u < y) \prec x + (u \prec y) < x + (u < x) \prec y + (u \prec x) < y,"#,
        ],
    },
    Printed {
        id: "pre-matched-12",
        equations: &[
            r#"u \prec (y \circ x) + u \prec (x \circ y) = (u \prec y) \prec x + (u \prec x) \prec y,"#,
        ],
    },
    Printed {
        id: "pre-matched-13",
        equations: &[
            r#"x < (v\diamond u) + x < (u\diamond v) = (x < v) < u + (x < u) < v,"#,
        ],
    },
    Printed {
        id: "pre-matched-14",
        equations: &[
            r#"\notag&& x \prec (u\diamond v) + x \prec (v\diamond u)\\
&&\qquad=  (x < u) \prec v + (x< v) \prec u + (x \prec u) < v + (x \prec v) < u,"#,
        ],
    },
    Printed {
        id: "pre-matched-15",
        equations: &[
            r#"u < (x\diamond v) + u < (v\diamond x) = (u < x) < v + (u < v) < x,"#,
        ],
    },
    Printed {
        id: "pre-matched-16",
        equations: &[
            r#"\notag&& u < (x \circ v) + u < (v \circ x) + u \prec (v\diamond x) + u \prec (x\diamond v) \\
&&\qquad=  (u < x) \prec v + (u < v) \prec x + (u \prec x) < v,"#,
        ],
    },
    Printed {
        id: "pre-matched-17",
        equations: &[
            r#"\notag&&(x > u) \prec y + (u < x) \prec y + (x \succ u) < y + (u \prec x) < y \\
&&\qquad=  x \succ (u < y) + x > (u \prec y) + u < (x \circ y),"#,
        ],
    },
    Printed {
        id: "pre-matched-18",
        equations: &[
            r#"(x \succ u) \prec y + (u \prec x) \prec y = u \prec (x \circ y) + x \succ (u\prec y),"#,
        ],
    },
    Printed {
        id: "pre-matched-19",
        equations: &[
            r#"\notag&&(u > x) \prec y + (u \succ x) < y + (x \prec u) < y + (x < u) \prec y \\
&&\qquad=  x \prec (u\diamond y) + u > (x \prec y) + x < (u \circ y),"#,
        ],
    },
    Printed {
        id: "pre-matched-20",
        equations: &[
            r#"(u \succ x) \prec y + (x \prec u) \prec y = x \prec (u \circ y) + u \succ (x\prec y),"#,
        ],
    },
    Printed {
        id: "pre-matched-21",
        equations: &[
            r#"\notag&&  x > (y \prec u) + y \prec (x\diamond u) + y < (x \circ u) + x \succ (y <u) \\
&=&  (x \succ y) < u + (y \prec x) < u,"#,
        ],
    },
    Printed {
        id: "pre-matched-22",
        equations: &[
            r#"(x \succ y) \prec u + (y \prec x) \prec u = x \succ (y \prec u) + y \prec (x\circ u),"#,
        ],
    },
    Printed {
        id: "pre-matched-23",
        equations: &[
            r#"(x > u) < v + (u < x) < v = x > (u < v) + u < (x\diamond v),"#,
        ],
    },
    Printed {
        id: "pre-matched-24",
        equations: &[
            r#"\notag&& (x > u) \prec v + (u < x) \prec v + (x \succ u) < v + (u \prec x) < v \\
&&\qquad=  x \succ (u < v) + u \prec (x\diamond v) + u < (x \circ v),"#,
        ],
    },
    Printed {
        id: "pre-matched-25",
        equations: &[
            r#"(u > x) < v + (x < u) < v = u > (x < v) + x < (u\diamond v),"#,
        ],
    },
    Printed {
        id: "pre-matched-26",
        equations: &[
            r#"\notag&& (u > x) \prec v + (x < u) \prec v\mbox{ + }(u \succ x) < v + (x \prec u) <v \\
&&\qquad=  x \prec (u\diamond v) + u > (x \prec v) + u \succ (x < v),"#,
        ],
    },
    Printed {
        id: "pre-matched-27",
        equations: &[
            r#"(u < v) < x + (v < u) < x = u > (v < x) + v < (u\diamond x),"#,
        ],
    },
    Printed {
        id: "pre-matched-28",
        equations: &[
            r#"\notag&&(u > v) \prec x + (v < u) \prec x \\
&&\qquad=  u \succ (v < x) + v \prec (u\diamond x) + u > (v \prec x) + v < (u \circ x),"#,
        ],
    },
    Printed {
        id: "pre-matched-29",
        equations: &[
            r#"\notag&& (x > u) \prec y + (x \circ y) > u + (x \succ u) < y \\
&&\qquad=  x \succ (u < y) + x > (u \prec y) + x > (y \succ u) + x \succ (y > u),"#,
        ],
    },
    Printed {
        id: "pre-matched-30",
        equations: &[
            r#"(x \succ u) \prec y + (x \circ y) \succ u = x \succ (u \prec y) + x \succ (y\succ u),"#,
        ],
    },
    Printed {
        id: "pre-matched-31",
        equations: &[
            r#"\notag&& (u > x) \prec y + (u \succ x) < y + (u\diamond y) \succ x + (u \circ y)> x \\
&&\qquad=  u > (x \prec y) + u > (y \succ x),"#,
        ],
    },
    Printed {
        id: "pre-matched-32",
        equations: &[
            r#"(u \succ x) \prec y + (u \circ y) \succ x = u \succ (y \succ x) + u \succ (x\prec y),"#,
        ],
    },
    Printed {
        id: "pre-matched-33",
        equations: &[
            r#"\notag&& (x \succ y) < u + (x \circ u) > y + (x\diamond u) \succ y \\
&&\qquad=  x > (u \succ y) + x \succ (u > y) + x \succ (y < u) + x > (y \prec u),"#,
        ],
    },
    Printed {
        id: "pre-matched-34",
        equations: &[
            r#"(x \succ y) \prec u + (x \circ u) \succ y = x \succ (u \succ y) + x \succ (y \prec u),"#,
        ],
    },
    Printed {
        id: "pre-matched-35",
        equations: &[
            r#"(x > u) < v + (x\diamond v) > u = x > (u < v) + x > (v > u),"#,
        ],
    },
    Printed {
        id: "pre-matched-36",
        equations: &[
            r#"\notag&& (x \succ u) < v + (x \circ v) > u + (x > u) \prec v + (x\diamond v)\succ u \\
&&\qquad=  x \succ (v > u) + x \succ (u < v),"#,
        ],
    },
    Printed {
        id: "pre-matched-37",
        equations: &[
            r#"(u > x) < v + (u\diamond v) > x = u > (x < v) + u > (v > x),"#,
        ],
    },
    Printed {
        id: "pre-matched-38",
        equations: &[
            r#"\notag&& (u\diamond v) \succ x + (u \succ x) < v + (u > x) \prec v \\
&&\qquad=  u \succ (x < v) + u \succ (v > x) + u > (v \succ x) + u > (x \prec v),"#,
        ],
    },
    Printed {
        id: "pre-matched-39",
        equations: &[
            r#"(u > v) < x + (u\diamond x) > v = u > (v < x) + u > (x > v),"#,
        ],
    },
    Printed {
        id: "pre-matched-40",
        equations: &[
            r#"\notag&&(u > v) \prec x + (u\diamond x) \succ v \\
&&\qquad= u \succ (x > v) + u > (x \succ v) + u > (v \prec x) + u \succ (v < x)."#,
        ],
    },
];

/// Pre-alternative unified product conditions.
pub const PRE_UNIFIED: &[Printed] = &[
    Printed {
        id: "pre-unified-1",
        equations: &[
            r#"\notag&& \omega _\diamond (u,v) > w + \omega _\diamond (v,u) > w + \omega _> (v\diamond u,w) + \omega_> (u\diamond v,w) \\
&=& u > \omega_> (v,w) + v > \omega_> (u,w) + \omega_> (u,v > w) +\omega_> (v,u > w) ,"#,
        ],
    },
    Printed {
        id: "pre-unified-2",
        equations: &[
            r#"\notag&& (u\diamond v) > w + (v\diamond u) > w + \omega _\diamond (u,v)\succ w + \omega _\diamond (v,u) \succ w \\
&=& u \succ \omega_> (v,w) + v \succ \omega_> (u,w) + u > (v > w) + v >(u > w),"#,
        ],
    },
    Printed {
        id: "pre-unified-3",
        equations: &[
            r#"\notag&&
(x\diamond u) \succ y + (u\diamond x) \succ y + (u \circ x) > y +
(x \circ u) > y \\
&=& x > (u \succ y) + u > (x \succ y) + x \succ (u > y),"#,
        ],
    },
    Printed {
        id: "pre-unified-4",
        equations: &[
            r#"(u \circ x) \succ y + (x \circ u) \succ y = x \succ (u \succ y) + u \succ (x\succ y),"#,
        ],
    },
    Printed {
        id: "pre-unified-5",
        equations: &[
            r#"\notag&&
(u\diamond x) > v + (x\diamond u) > v + \omega_> (u \circ x,v) +\omega_> (x \circ u,v) \\
&=& x > (u > v) + u > (x > v) + \omega_> (u,x \succ v) + x \succ \omega_>(u,v),"#,
        ],
    },
    Printed {
        id: "pre-unified-6",
        equations: &[
            r#"\notag&&
(x\diamond u) \succ v + (u\diamond x) \succ v + (x \circ u) > v +(u \circ x) > v \\
&=& x \succ (u > v) + u \succ (x > v) + u > (x \succ v),"#,
        ],
    },
    Printed {
        id: "pre-unified-7",
        equations: &[
            r#"\notag&& (x \circ y) > u + (y \circ x) > u \\
&=& x > (y \succ u) + y \succ (x > u) + x\succ (y > u) + y > (x \succ u),"#,
        ],
    },
    Printed {
        id: "pre-unified-8",
        equations: &[
            r#"(x \circ y) \succ u + (y \circ x) \succ u = x \succ (y \succ u) + y \succ (x
\succ u),"#,
        ],
    },
    Printed {
        id: "pre-unified-9",
        equations: &[
            r#"\notag&& (v\diamond u) > x + (u\diamond v) > x + \omega _\diamond (u,v)\succ x + \omega _\diamond (v,u) \succ x \\
&=& u > (v > x) + v > (u > x) + \omega_> (u,v > x) + \omega_> (v,u \succ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-10",
        equations: &[
            r#"\notag&&
(u\diamond v) \succ x + (v\diamond u) \succ x \\
&&\qquad= v \succ (u > x) + u
\succ (v > x) + u > (v \succ x) + v > (u \succ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-11",
        equations: &[
            r#"\notag&& \omega_< (u < v,w) + \omega_< (u < w,v) + \omega_< (u,w) < v + \omega_ < (u,v) < w \\
&=& \omega_< (u,w\diamond v) + u < \omega _\diamond (w,v) + \omega_ < (u,v\diamond w) + u < \omega _\diamond (v,w),"#,
        ],
    },
    Printed {
        id: "pre-unified-12",
        equations: &[
            r#"\notag&&
(u < v) < w + (u < w) < v + \omega_< (u,w) \prec v + \omega_< (u,v)\prec w \\
&=& u < (v\diamond w) + u < (w\diamond v) + u \prec \omega_\diamond (v,w) + u \prec \omega _\diamond (w,v),"#,
        ],
    },
    Printed {
        id: "pre-unified-13",
        equations: &[
            r#"\notag&& (x \prec u) < y + (x \prec y) < u + (x < u) \prec y \\
&=& x \prec (y\diamond u) + x \prec (u\diamond y) + x < (y \circ u) +x < (u \circ y),"#,
        ],
    },
    Printed {
        id: "pre-unified-14",
        equations: &[
            r#"(x \prec u) \prec y + (x \prec y) \prec u = x \prec (u \circ y) + x \prec (y
\circ u),"#,
        ],
    },
    Printed {
        id: "pre-unified-15",
        equations: &[
            r#"\notag&& (u < x) \prec y + (u \prec x) < y + (u < y) \prec x + (u \prec y) < x \\
&&\qquad= u <
(x \circ y) + u < (y \circ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-16",
        equations: &[
            r#"(u \prec x) \prec y + (u \prec y) \prec x = u \prec (x \circ y) + u \prec (y
\circ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-17",
        equations: &[
            r#"\notag&&
(x < u) < v + (x < v) < u + \omega_< (x \prec v,u)\mbox{ + }\omega_< (x\prec u,v) \\
&=& x < (v\diamond u) + x < (u\diamond v) + x \prec \omega_\diamond (v,u) + x \prec \omega _\diamond (u,v),"#,
        ],
    },
    Printed {
        id: "pre-unified-18",
        equations: &[
            r#"\notag&&
(x < u) \prec v + (x < v) \prec u + (x \prec v) < u\mbox{ + }(x \prec u) < v\\
&&\qquad= x \prec (u\diamond v) + x \prec (v\diamond u),"#,
        ],
    },
    Printed {
        id: "pre-unified-19",
        equations: &[
            r#"\notag&& (u < v) < x + (u < x) < v + \omega_< (u \prec x,v) + \omega_< (u,v)\prec x \\
&=& u < (x\diamond v) + u < (v\diamond x) + \omega_< (u,x \circ v)+ \omega_< (u,v \circ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-20",
        equations: &[
            r#"\notag&& (u < x) \prec v + (u < v) \prec x + (u \prec x) < v \\
&=& u \prec (x\diamond v) + u \prec (v\diamond x) + u < (v \circ x) +u < (x \circ v),"#,
        ],
    },
    Printed {
        id: "pre-unified-21",
        equations: &[
            r#"\notag&&
\omega_> (u,v) < w + \omega_< (u > v,w) + \omega_< (v < u,w) + \omega_ < (v,u) < w \\
&=& u > \omega_< (v,w) + v < \omega _\diamond (u,w) + \omega_> (u,v <
w) + \omega_< (v,u\diamond w),"#,
        ],
    },
    Printed {
        id: "pre-unified-22",
        equations: &[
            r#"\notag&& (u > v) < w + (v < u) < w + \omega_> (u,v) \prec w + \omega_< (v,u)\prec w \\
&=& v < (u\diamond w) + u > (v < w) + u \succ \omega_< (v,w) + v \prec\omega _\diamond (u,w),"#,
        ],
    },
    Printed {
        id: "pre-unified-23",
        equations: &[
            r#"\notag&&
(x > u) \prec y + (u < x) \prec y + (x \succ u) < y + (u \prec x) < y \\
&=& x \succ (u < y) + x > (u \prec y) + u < (x \circ y),"#,
        ],
    },
    Printed {
        id: "pre-unified-24",
        equations: &[
            r#"(x \succ u) \prec y + (u \prec x) \prec y = u \prec (x \circ y) + x \succ (u\prec y),"#,
        ],
    },
    Printed {
        id: "pre-unified-25",
        equations: &[
            r#"\notag&&
(u > x) \prec y + (u \succ x) < y + (x \prec u) < y + (x < u) \prec y \\
&=& x \prec (u\diamond y) + u > (x \prec y) + x < (u \circ y) ,"#,
        ],
    },
    Printed {
        id: "pre-unified-26",
        equations: &[
            r#"(u \succ x) \prec y + (x \prec u) \prec y = x \prec (u \circ y) + u \succ (x\prec y),"#,
        ],
    },
    Printed {
        id: "pre-unified-27",
        equations: &[
            r#"\notag&&
x > (y \prec u) + y \prec (x\diamond u) + y < (x \circ u)+ x\succ (y < u) \\
&&\qquad= (y \prec x) < u + (x \succ y) < u,"#,
        ],
    },
    Printed {
        id: "pre-unified-28",
        equations: &[
            r#"(x \succ y) \prec u + (y \prec x) \prec u = y \prec (x \circ u) + x \succ (y\prec u),"#,
        ],
    },
    Printed {
        id: "pre-unified-29",
        equations: &[
            r#"\notag&& (x > u) < v + (u < x) < v + \omega_< (x \succ u,v) + \omega_< (u \prec x,v) \\
&=& x > (u < v) + u < (x\diamond v) + x \succ \omega_< (u,v) + \omega _< (u,x \circ v),"#,
        ],
    },
    Printed {
        id: "pre-unified-30",
        equations: &[
            r#"\notag&&
(u < x) \prec v + (x > u) \prec v + (x \succ u) < v + (u \prec x) < v \\
&=& x \succ (u < v) + u \prec (x\diamond v) + u < (x \circ v),"#,
        ],
    },
    Printed {
        id: "pre-unified-31",
        equations: &[
            r#"\notag&& (u > x) < v + (x < u) < v + \omega_< (u \succ x,v) + \omega_< (x \prec u,v) \\
&=& u > (x < v) + x < (u\diamond v) + \omega_> (u,x \prec v) + x \prec\omega _\diamond (u,v),"#,
        ],
    },
    Printed {
        id: "pre-unified-32",
        equations: &[
            r#"\notag&& (u > x) \prec v + (x < u) \prec v\mbox{ + }(u \succ x) < v + (x \prec u) <v \\
&=& x \prec (u\diamond v) + u > (x \prec v) + u \succ (x < v),"#,
        ],
    },
    Printed {
        id: "pre-unified-33",
        equations: &[
            r#"\notag&& (u < v) < x + (v < u) < x + \omega_> (u,v) \prec x + \omega_< (v,u)\prec x \\
&=& u > (v < x) + v < (u\diamond x) + \omega_> (u,v \prec x) + \omega _< (v,u \circ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-34",
        equations: &[
            r#"\notag&&(u > v) \prec x + (v < u) \prec x \\
&&\qquad= u \succ (v < x) + v \prec (u\diamond x) + u > (v \prec x) + v < (u \circ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-35",
        equations: &[
            r#"\notag&& \omega _\diamond (u,w) > v + \omega_> (u\diamond w,v) + \omega _> (u,v) < w + \omega_< (u > v,w) \\
&=& \omega_> (u,v < w) + u > \omega_> (w,v) + \omega_> (u,w > v) + u >\omega_< (v,w),"#,
        ],
    },
    Printed {
        id: "pre-unified-36",
        equations: &[
            r#"\notag&& (u > v) < w + (u\diamond w) > v + \omega_> (u,v) \prec w + \omega_\diamond (u,w) \succ v \\
&=& u > (v < w) + u > (w > v) + u \succ \omega_< (v,w) + u \succ \omega_>(w,v),"#,
        ],
    },
    Printed {
        id: "pre-unified-37",
        equations: &[
            r#"\notag&& (x > u) \prec y + (x \circ y) > u + (x \succ u) < y \\
&=& x \succ (u < y) + x > (u \prec y) + x > (y \succ u) + x \succ (y > u),"#,
        ],
    },
    Printed {
        id: "pre-unified-38",
        equations: &[
            r#"(x \succ u) \prec y + (x \circ y) \succ u = x \succ (u \prec y) + x \succ (y\succ u),"#,
        ],
    },
    Printed {
        id: "pre-unified-39",
        equations: &[
            r#"\notag&&(u > x) \prec y + (u \succ x) < y + (u\diamond y) \succ x + (u \circ y)> x \\
&&\qquad= u > (x \prec y) + u > (y \succ x),,"#,
        ],
    },
    Printed {
        id: "pre-unified-40",
        equations: &[
            r#"(u \succ x) \prec y + (u \circ y) \succ x = u \succ (y \succ x) + u \succ (x
\prec y),"#,
        ],
    },
    Printed {
        id: "pre-unified-41",
        equations: &[
            r#"\notag&&
(x \succ y) < u + (x \circ u) > y + (x\diamond u) \succ y \\
&=& x > (u \succ y) + x \succ (u > y) + x \succ (y < u) + x > (y \prec u),"#,
        ],
    },
    Printed {
        id: "pre-unified-42",
        equations: &[
            r#"(x \succ y) \prec u + (x \circ u) \succ y = x \succ (u \succ y) + x \succ (y\prec u),"#,
        ],
    },
    Printed {
        id: "pre-unified-43",
        equations: &[
            r#"\notag&& (x > u) < v + (x\diamond v) > u + \omega_< (x \succ u,v) + \omega_>(x \circ v,u) \\
&=& x > (u < v) + x > (v > u) + x \succ \omega_< (u,v) + x \succ \omega_>(v,u),"#,
        ],
    },
    Printed {
        id: "pre-unified-44",
        equations: &[
            r#"\notag&&
(x \succ u) < v + (x \circ v) > u + (x > u) \prec v + (x\diamond v)\succ u \\
&&\qquad= x \succ (v > u) + x \succ (u < v),"#,
        ],
    },
    Printed {
        id: "pre-unified-45",
        equations: &[
            r#"\notag&& (u > x) < v + (u\diamond v) > x + \omega_< (u \succ x,v) + \omega_\diamond (u,v) \succ x \\
&=& u > (x < v) + u > (v > x) + \omega_> (u,x \prec v) + \omega_> (u,v\succ x),"#,
        ],
    },
    Printed {
        id: "pre-unified-46",
        equations: &[
            r#"\notag&& (u\diamond v) \succ x + (u \succ x) < v + (u > x) \prec v \\
&=& u \succ (x < v) + u \succ (v > x) + u > (v \succ x) + u > (x \prec v) ,"#,
        ],
    },
    Printed {
        id: "pre-unified-47",
        equations: &[
            r#"\notag&& (u > v) < x + (u\diamond x) > v + \omega_> (u,v) \prec x + \omega_>(u \circ x,v) \\
&=& u > (v < x) + u > (x > v) + \omega_> (u,v \prec x) + \omega_> (u,x\succ v),"#,
        ],
    },
    Printed {
        id: "pre-unified-48",
        equations: &[
            r#"\notag&&(u > v) \prec x + (u\diamond x) \succ v \\
&&\qquad= u \succ (x > v) + u > (x \succ v) + u > (v \prec x) + u \succ (v < x)."#,
        ],
    },
];
