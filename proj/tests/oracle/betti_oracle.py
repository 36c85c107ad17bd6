"""Brute-force Betti numbers of h_n over GF(p), used to freeze the test fixtures.

Cells are explicit sorted tuples of generator indices (z=0, x_i=i, y_i=n+i),
wedge signs come from inversion counts and ranks from plain Gauss-Jordan
elimination mod p. Shares no code with the C++ library.

usage: betti_oracle.py N_MIN:N_MAX P [P ...]
"""
import itertools, sys
def heis(n):
    gens=['z']+[f'x{i}' for i in range(1,n+1)]+[f'y{i}' for i in range(1,n+1)]
    br={}
    for i in range(1,n+1):
        br[(i,n+i)]={0:1}; br[(n+i,i)]={0:-1}
    return len(gens),br
def sort_sign(lst):
    inv=sum(1 for a in range(len(lst)) for b in range(a+1,len(lst)) if lst[a]>lst[b])
    return (-1)**inv, tuple(sorted(lst))
def d(cell,br):
    out={}
    k=len(cell)
    for i in range(k):
        for j in range(i+1,k):
            b=br.get((cell[i],cell[j]))
            if not b: continue
            rest=[cell[t] for t in range(k) if t not in (i,j)]
            for g,c in b.items():
                if g in rest: continue
                s,key=sort_sign([g]+rest)
                out[key]=out.get(key,0)+(-1)**(i+1+j+1)*c*s
    return {a:v for a,v in out.items() if v}
def rank(M,p):
    M=[[x%p for x in r] for r in M]; r=0
    cols=len(M[0]) if M else 0
    for c in range(cols):
        piv=next((i for i in range(r,len(M)) if M[i][c]),None)
        if piv is None: continue
        M[r],M[piv]=M[piv],M[r]
        inv=pow(M[r][c],p-2,p)
        M[r]=[x*inv%p for x in M[r]]
        for i in range(len(M)):
            if i!=r and M[i][c]:
                f=M[i][c]; M[i]=[(a-f*b)%p for a,b in zip(M[i],M[r])]
        r+=1
    return r
def betti(n,p):
    dim,br=heis(n)
    cells=[list(itertools.combinations(range(dim),k)) for k in range(dim+1)]
    rk=[0]*(dim+2)
    for k in range(1,dim+1):
        idx={c:i for i,c in enumerate(cells[k-1])}
        M=[[0]*len(cells[k]) for _ in cells[k-1]]
        for j,c in enumerate(cells[k]):
            for t,v in d(c,br).items(): M[idx[t]][j]+=v
        rk[k]=rank(M,p)
    from math import comb
    return [comb(dim,i)-rk[i]-rk[i+1] for i in range(dim+1)]
for n in range(int(sys.argv[1].split(":")[0]),int(sys.argv[1].split(":")[1])+1):
    for p in map(int,sys.argv[2:]):
        print(n,p,betti(n,p))
