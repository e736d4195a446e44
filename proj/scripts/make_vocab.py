#!/usr/bin/env python3
"""Builds the bundled fixture vocabulary (data/fixtures/vocab.txt).

Layout mirrors the BERT-uncased convention: specials first, then single
characters, then whole words, then ## continuation pieces. Ids are line
numbers. The toy encoder config's vocab_size must equal the line count.
"""
import string
import sys

SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]

CHARS = (
    [c for c in string.ascii_lowercase]
    + [c for c in string.digits]
    + [c for c in "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~"]
    + ["£", "€", "§", "°", "–", "—", "‘", "’", "“", "”", "…", "¡", "¿", "«", "»"]
)

WORDS = """
the a an and but or of to in on at by for with from into over under about
i you he she it we they me him her us them my your his its our their
this that these those who what which when where why how
is are was were be been being am do does did done have has had having
will would can could shall should may might must not no yes
one two three four five six seven eight nine ten eleven twelve twenty
hundred thousand first second third last next
man woman child children men women people person family friend
dog cat bird horse fish zebra lion tiger rabbit mouse
house home room door window table chair bed kitchen garden
city town street road bridge river mountain forest field park
school office shop market store library church station airport
glass cup plate knife fork spoon bottle box bag book
paper letter word sentence story page line name number
day night morning evening week month year hour minute moment
sun moon star sky cloud rain snow wind storm weather
water fire earth air light dark shadow color sound voice
food bread milk tea coffee sugar salt fruit apple orange
tree flower grass leaf branch root stone rock sand soil
hand head eye ear nose mouth face hair arm leg
foot heart mind body blood skin bone breath smile tear
walk run jump stand sit lie sleep wake eat drink
speak talk say tell ask answer call shout whisper sing
read write draw paint play work rest stop start finish
open close push pull take give bring carry hold drop
break cut tear fold bend throw catch kick hit touch
see look watch hear listen feel smell taste think know
remember forget learn teach understand believe hope wish want need
love hate like fear worry laugh cry smile frown sigh
come go leave arrive return stay move travel visit follow
buy sell pay spend save lose find keep send receive
make build create destroy fix mend clean wash dry fill
grow change become seem appear remain happen begin end continue
big small large little long short tall wide narrow deep
old new young fresh ancient modern early late quick slow
good bad fine poor rich happy sad angry calm quiet
loud soft hard easy difficult simple clear dark bright warm
cold hot cool dry wet heavy empty full open closed
red blue green yellow white black brown grey pink purple
beautiful ugly clever foolish kind cruel brave afraid strange familiar
always never often sometimes usually rarely again once twice soon
here there everywhere nowhere somewhere inside outside above below behind
before after during while until since already still just almost
very quite rather too enough much many more most less
boy girl king queen soldier farmer doctor teacher student writer
broke walked talked played opened closed wanted needed looked asked
called turned moved lived worked seemed helped started stopped waited
cried smiled laughed jumped stayed reached carried dropped picked pushed
pulled filled washed cleaned covered crossed entered followed joined kissed
knocked landed lasted listened managed married mentioned noticed offered
painted passed planted pointed prepared pretended promised raised refused
remembered repeated replied rested returned rolled rubbed rushed seated
shouted signed snowed sounded studied suggested supposed surprised thanked
traveled treated trusted visited waved whispered wondered
goes does makes takes gives keeps finds tells puts means
lets helps talks walks plays opens closes wants needs looks
asks calls turns moves lives works seems starts stops waits
reaches carries drops picks pushes pulls fills washes covers crosses
says knows thinks sees comes gets
window market basket garden kitchen village station mountain morning evening
winter summer spring autumn season holiday journey picture moment nature
myself yourself himself herself itself ourselves themselves
cafe zurich senor naive resume
""".split()

PIECES = (
    ["##" + c for c in string.ascii_lowercase]
    + ["##" + c for c in string.digits]
    + """##s ##ed ##ing ##er ##est ##ly ##y ##e ##es ##en ##al ##an ##ar
##ab ##om ##on ##or ##ot ##le ##el ##et ##it ##ic ##id ##in ##is ##us
##ul ##um ##un ##ur ##ut ##ra ##re ##ri ##ro ##ru ##ta ##te ##ti ##to
##th ##tion ##ment ##ness ##able ##ful ##less ##ish ##ous ##ive ##age
##ate ##ine ##ite ##ize ##land ##man ##time ##berg ##ton ##ville ##field
##book ##work ##keeper ##maker ##place ##house ##light ##stone ##wood
##ward ##ever ##self""".split()
)


def main(out_path: str) -> None:
    seen = set()
    lines = []
    for tok in SPECIALS + CHARS + sorted(set(WORDS), key=WORDS.index) + PIECES:
        if tok in seen:
            continue
        seen.add(tok)
        lines.append(tok)
    with open(out_path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    print(f"{len(lines)} tokens -> {out_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures/vocab.txt")
