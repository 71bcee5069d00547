#!/usr/bin/env python3
"""Regenerates data/verbs.tsv (inflection<TAB>lemma) from a base verb list."""
import os

IRREGULAR = {
    "be": ["am", "is", "are", "was", "were", "been", "being"],
    "have": ["has", "had", "having"],
    "do": ["does", "did", "done", "doing"],
    "say": ["says", "said", "saying"],
    "go": ["goes", "went", "gone", "going"],
    "get": ["gets", "got", "gotten", "getting"],
    "make": ["makes", "made", "making"],
    "know": ["knows", "knew", "known", "knowing"],
    "think": ["thinks", "thought", "thinking"],
    "take": ["takes", "took", "taken", "taking"],
    "see": ["sees", "saw", "seen", "seeing"],
    "come": ["comes", "came", "coming"],
    "find": ["finds", "found", "finding"],
    "give": ["gives", "gave", "given", "giving"],
    "tell": ["tells", "told", "telling"],
    "become": ["becomes", "became", "becoming"],
    "show": ["shows", "showed", "shown", "showing"],
    "leave": ["leaves", "left", "leaving"],
    "feel": ["feels", "felt", "feeling"],
    "put": ["puts", "putting"],
    "bring": ["brings", "brought", "bringing"],
    "begin": ["begins", "began", "begun", "beginning"],
    "keep": ["keeps", "kept", "keeping"],
    "hold": ["holds", "held", "holding"],
    "write": ["writes", "wrote", "written", "writing"],
    "stand": ["stands", "stood", "standing"],
    "hear": ["hears", "heard", "hearing"],
    "let": ["lets", "letting"],
    "mean": ["means", "meant", "meaning"],
    "set": ["sets", "setting"],
    "meet": ["meets", "met", "meeting"],
    "run": ["runs", "ran", "running"],
    "pay": ["pays", "paid", "paying"],
    "sit": ["sits", "sat", "sitting"],
    "speak": ["speaks", "spoke", "spoken", "speaking"],
    "lie": ["lies", "lay", "lain", "lying", "lied"],
    "lead": ["leads", "led", "leading"],
    "read": ["reads", "reading"],
    "grow": ["grows", "grew", "grown", "growing"],
    "lose": ["loses", "lost", "losing"],
    "fall": ["falls", "fell", "fallen", "falling"],
    "send": ["sends", "sent", "sending"],
    "build": ["builds", "built", "building"],
    "understand": ["understands", "understood", "understanding"],
    "draw": ["draws", "drew", "drawn", "drawing"],
    "break": ["breaks", "broke", "broken", "breaking"],
    "spend": ["spends", "spent", "spending"],
    "cut": ["cuts", "cutting"],
    "rise": ["rises", "rose", "risen", "rising"],
    "drive": ["drives", "drove", "driven", "driving"],
    "buy": ["buys", "bought", "buying"],
    "wear": ["wears", "wore", "worn", "wearing"],
    "choose": ["chooses", "chose", "chosen", "choosing"],
    "seek": ["seeks", "sought", "seeking"],
    "throw": ["throws", "threw", "thrown", "throwing"],
    "catch": ["catches", "caught", "catching"],
    "deal": ["deals", "dealt", "dealing"],
    "win": ["wins", "won", "winning"],
    "forget": ["forgets", "forgot", "forgotten", "forgetting"],
    "fight": ["fights", "fought", "fighting"],
    "teach": ["teaches", "taught", "teaching"],
    "eat": ["eats", "ate", "eaten", "eating"],
    "sell": ["sells", "sold", "selling"],
    "swim": ["swims", "swam", "swum", "swimming"],
    "sing": ["sings", "sang", "sung", "singing"],
    "ride": ["rides", "rode", "ridden", "riding"],
    "fly": ["flies", "flew", "flown", "flying"],
    "ring": ["rings", "rang", "rung", "ringing"],
    "drink": ["drinks", "drank", "drunk", "drinking"],
    "steal": ["steals", "stole", "stolen", "stealing"],
    "strike": ["strikes", "struck", "striking"],
    "swear": ["swears", "swore", "sworn", "swearing"],
    "tear": ["tears", "tore", "torn", "tearing"],
    "wake": ["wakes", "woke", "woken", "waking"],
    "weep": ["weeps", "wept", "weeping"],
    "sleep": ["sleeps", "slept", "sleeping"],
    "creep": ["creeps", "crept", "creeping"],
    "sweep": ["sweeps", "swept", "sweeping"],
    "kneel": ["kneels", "knelt", "kneeling"],
    "flee": ["flees", "fled", "fleeing"],
    "cling": ["clings", "clung", "clinging"],
    "swing": ["swings", "swung", "swinging"],
    "sink": ["sinks", "sank", "sunk", "sinking"],
    "shake": ["shakes", "shook", "shaken", "shaking"],
    "shine": ["shines", "shone", "shining"],
    "shoot": ["shoots", "shot", "shooting"],
    "shut": ["shuts", "shutting"],
    "slide": ["slides", "slid", "sliding"],
    "spring": ["springs", "sprang", "sprung", "springing"],
    "stick": ["sticks", "stuck", "sticking"],
    "sting": ["stings", "stung", "stinging"],
    "blow": ["blows", "blew", "blown", "blowing"],
    "bear": ["bears", "bore", "borne", "bearing"],
    "bend": ["bends", "bent", "bending"],
    "bind": ["binds", "bound", "binding"],
    "bite": ["bites", "bit", "bitten", "biting"],
    "bleed": ["bleeds", "bled", "bleeding"],
    "burst": ["bursts", "bursting"],
    "cast": ["casts", "casting"],
    "dig": ["digs", "dug", "digging"],
    "feed": ["feeds", "fed", "feeding"],
    "forgive": ["forgives", "forgave", "forgiven", "forgiving"],
    "freeze": ["freezes", "froze", "frozen", "freezing"],
    "hang": ["hangs", "hung", "hanging"],
    "hide": ["hides", "hid", "hidden", "hiding"],
    "hit": ["hits", "hitting"],
    "hurt": ["hurts", "hurting"],
    "kneel": ["kneels", "knelt", "kneeling"],
    "lay": ["lays", "laid", "laying"],
    "lend": ["lends", "lent", "lending"],
    "light": ["lights", "lit", "lighting"],
    "seem": ["seems", "seemed", "seeming"],
    "appear": ["appears", "appeared", "appearing"],
    "spin": ["spins", "spun", "spinning"],
    "spit": ["spits", "spat", "spitting"],
    "split": ["splits", "splitting"],
    "spread": ["spreads", "spreading"],
    "tread": ["treads", "trod", "trodden", "treading"],
    "wind": ["winds", "wound", "winding"],
    "withdraw": ["withdraws", "withdrew", "withdrawn", "withdrawing"],
    "arise": ["arises", "arose", "arisen", "arising"],
    "awake": ["awakes", "awoke", "awoken", "awaking"],
    "beat": ["beats", "beaten", "beating"],
    "bid": ["bids", "bade", "bidden", "bidding"],
    "burn": ["burns", "burned", "burnt", "burning"],
    "dream": ["dreams", "dreamed", "dreamt", "dreaming"],
    "dwell": ["dwells", "dwelt", "dwelling"],
    "kneel": ["kneels", "knelt", "kneeling"],
    "lean": ["leans", "leaned", "leant", "leaning"],
    "leap": ["leaps", "leaped", "leapt", "leaping"],
    "learn": ["learns", "learned", "learnt", "learning"],
    "smell": ["smells", "smelled", "smelt", "smelling"],
    "spell": ["spells", "spelled", "spelt", "spelling"],
    "spill": ["spills", "spilled", "spilt", "spilling"],
    "spoil": ["spoils", "spoiled", "spoilt", "spoiling"],
}

VOWELS = "aeiou"

BASE_VERBS = """
accept accompany accuse ache achieve act add admire admit adopt adore advance advise agree aid aim
alarm allow amaze amuse anger announce annoy answer apologize approve argue arm arrange arrest
arrive ask assist assure astonish attack attempt attend avoid await bake balance bang bar bargain
bark bathe battle beam beckon beg behave believe belong betray blame blast blaze bless blink
bloom blossom blush boast boil bolt bomb book boom borrow bother bounce bow brace brag
brave breathe brew bruise brush bubble bully bump bury bustle buzz calm camp care caress carry
carve cease celebrate challenge change charge charm chase chat cheat check cheer cherish chew
chill chase choke chop chuckle claim clap clash clasp clean clear clench click climb clutch
coax collapse collect comfort command comment commit compare complain complete confess confide
confirm confront confuse congratulate connect conquer consent consider console conspire contain
continue convince cook correct cough count cover crack cradle crash crawl criticize cross crouch
crush cry curse dance dare darken dash dazzle deceive decide declare defeat defend delay delight
deliver demand deny depart depend describe desert deserve despair destroy devour die dine dip
disagree disappear disappoint discover discuss disguise dismiss disobey display distract disturb
dodge dominate doubt drag dread dress drift drop drown doze dump dust earn echo embrace
emerge employ empty encourage end endure enjoy enter entertain envy escape escort examine
exclaim excuse exhaust expect explain explode explore express face fade fail faint fancy
fasten favor fear feast fetch fill finish fire fix flash flatter flinch float flood flourish
flow flush fold follow fool force form fret frighten frown fumble fuss gain gallop gasp
gather gaze giggle glance glare gleam glide glow gnaw grab grant grasp greet grieve grin grip
groan growl grudge grumble grunt guard guess guide gulp gush halt hammer hand handle happen
harm hate haul heal heap help hesitate hiss hobble hop hope howl hug hum hunt hurl hurry hush
ignore imagine impress improve inform injure inquire insist inspect inspire insult intend
interrupt introduce invite jeer jerk join joke judge jump kick kill kiss knock laugh launch
lament land lash last latch lecture lift limp linger listen live lock long look love lower lull
lure lurk manage march mark marry marvel mend mention mock moan mount mourn move mumble murder
murmur mutter nag name need neglect nod note notice nudge obey object observe obtain occur offer
open order pace pack paint pant pardon pass pat pause peer perish persuade pick pile pinch pity
place plan plant play plead please pledge plot plunge point poison poke polish ponder pounce
pour practice praise pray preach prepare present press pretend prevent promise propose protect
protest prove provide pull punch punish push puzzle quarrel question quit race rage raid rain
raise rally ramble reach realize reassure rebel recall receive recite reckon recognize recover
refuse regret rejoice relax release relent relieve remain remark remember remind remove repair
repeat reply report request rescue resent resist resolve respect respond rest retire retreat
return reveal roam roar rob rock roll rub ruin rule rush sail salute save scamper scare scatter
scold scoop scorn scowl scramble scream scrub search seize serve settle shame share shatter
shelter shift shiver shout shove shriek shrug shudder sigh signal silence sip slam slap slay
slip smash smile smirk smother snap snarl snatch sneak sneer sniff snore snort sob soothe
sparkle spare spark spill splash sprint spy squeal squeeze stagger stamp stare start startle
starve stay step stir stomp stop storm stray stretch stroke stroll struggle strut study stumble
stun succeed suffer suggest summon support suppose surprise surrender survive suspect swallow
sway swerve talk tap taste taunt tease tempt terrify thank threaten thrill thrive tickle tie
tiptoe tire toast toil toss touch track trade trail train tramp trap travel treasure treat
tremble trick trip triumph trot trouble trust try tug tumble turn twist urge use value vanish
venture visit vow wail wait walk wander want warn wash waste watch water wave weary weigh
welcome whimper whine whirl whisper whistle wince wipe wish witness wonder work worry wound
wrap wreck wrestle wriggle yawn yell yield
""".split()

BASE_VERBS = [v for v in BASE_VERBS if v.isascii() and v.isalpha()]


def regular_forms(base):
    forms = set()
    # 3rd person singular
    if base.endswith(("s", "sh", "ch", "x", "z", "o")):
        forms.add(base + "es")
    elif base.endswith("y") and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ies")
    else:
        forms.add(base + "s")
    # past / past participle
    if base.endswith("e"):
        forms.add(base + "d")
    elif base.endswith("y") and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ied")
    elif (len(base) >= 3 and base[-1] not in VOWELS + "wxy" and base[-2] in VOWELS
          and base[-3] not in VOWELS and len(base) <= 4):
        forms.add(base + base[-1] + "ed")  # CVC doubling for short stems
        forms.add(base + "ed")
    else:
        forms.add(base + "ed")
    # gerund
    if base.endswith("ie"):
        forms.add(base[:-2] + "ying")
    elif base.endswith("e") and not base.endswith("ee"):
        forms.add(base[:-1] + "ing")
    elif (len(base) >= 3 and base[-1] not in VOWELS + "wxy" and base[-2] in VOWELS
          and base[-3] not in VOWELS and len(base) <= 4):
        forms.add(base + base[-1] + "ing")
        forms.add(base + "ing")
    else:
        forms.add(base + "ing")
    return forms


def main():
    entries = {}
    for lemma, forms in IRREGULAR.items():
        entries[lemma] = lemma
        for f in forms:
            entries.setdefault(f, lemma)
    for base in BASE_VERBS:
        if base in IRREGULAR:
            continue
        entries.setdefault(base, base)
        for f in regular_forms(base):
            entries.setdefault(f, base)
    out = os.path.join(os.path.dirname(__file__), "..", "data", "verbs.tsv")
    with open(out, "w") as fh:
        fh.write("# inflection\tlemma\n")
        for form in sorted(entries):
            fh.write(f"{form}\t{entries[form]}\n")
    print(f"{len(entries)} entries")


if __name__ == "__main__":
    main()
