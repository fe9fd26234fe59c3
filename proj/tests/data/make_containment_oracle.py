# Regenerates containment_oracle.txt: random hosts, verdicts from networkx subgraph monomorphism.
import networkx as nx, random
from networkx.algorithms import isomorphism as iso
random.seed(20261015)
def spider(n,l,m):
    g=nx.Graph(); g.add_node(0); nxt=1
    leaves=n-m*l-1-l
    for _ in range(leaves): g.add_edge(0,nxt); nxt+=1
    for _ in range(l):
        prev=0
        for _ in range(m+1): g.add_edge(prev,nxt); prev=nxt; nxt+=1
    assert g.number_of_nodes()==n
    return g
def joined(n,l):
    a=max(l,n-l)-1; b=min(l,n-l)-1
    g=nx.Graph(); c2=a+1
    for i in range(1,a+1): g.add_edge(0,i)
    g.add_edge(0,c2)
    for i in range(b): g.add_edge(c2,c2+1+i)
    assert g.number_of_nodes()==n
    return g
def mono(host,pat):
    return iso.GraphMatcher(host,pat).subgraph_is_monomorphic()
out=[]
for k in range(60):
    n=random.choice([7,8,9,10])
    p=random.choice([0.2,0.35,0.5,0.65,0.8])
    h=nx.gnp_random_graph(n,p,seed=random.randrange(10**9))
    g6=nx.to_graph6_bytes(h,header=False).decode().strip()
    t=random.randrange(n-3,n+1) if n>=7 else n
    t=max(6,min(t,n))
    pats={f"S({t})":nx.star_graph(t-1), f"S({t};1,1)":spider(t,1,1), f"S({t};1,2)":spider(t,1,2),
          f"S({t};2,1)":spider(t,2,1), f"S({t};3)":joined(t,3)}
    for m in [4,5,6]:
        pats[f"W({m})"]=nx.wheel_graph(m+1)
    for k2 in [5,6]:
        pats[f"C({k2})"]=nx.cycle_graph(k2)
    for name,pg in pats.items():
        out.append(f"{g6} {name} {1 if mono(h,pg) else 0}")
open("containment_oracle.txt","w").write("\n".join(out)+"\n")
print(len(out), sum(int(l[-1]) for l in out))
