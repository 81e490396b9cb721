"""Published reference values: the refinement matrix for n = 10 and the
factored wavelet matrices ``diag(...) @ core`` for n = 1..10.

Entries are strings ``"a/b"`` or ``"a/b*sqrt(m)"``; see :func:`parse_entry`.
The n = 5 core is stored as published: its rows are scaled so that they do
not end in 1 (see :func:`normalized_core`).
"""
import re
from fractions import Fraction

from .ratmath import Surd

_ENTRY = re.compile(r"(-?\d+(?:/\d+)?)(?:\*sqrt\((\d+)\))?")


def parse_entry(text: str) -> Surd:
    m = _ENTRY.fullmatch(text.replace(" ", ""))
    if not m:
        raise ValueError(f"malformed table entry {text!r}")
    return Surd(Fraction(m.group(1)), int(m.group(2) or 1))


def normalized_core(n: int) -> list[list[Fraction]]:
    """Published core rows divided by their last entry."""
    _, core = HAT_D[n]
    out = []
    for row in core:
        vals = [Fraction(x) for x in row]
        out.append([v / vals[-1] for v in vals])
    return out


C_MINUS_10 = [
    ['1', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
    ['-1/2*sqrt(3)', '1/2', '0', '0', '0', '0', '0', '0', '0', '0'],
    ['0', '-1/4*sqrt(15)', '1/4', '0', '0', '0', '0', '0', '0', '0'],
    ['1/8*sqrt(7)', '1/8*sqrt(21)', '-1/8*sqrt(35)', '1/8', '0', '0', '0', '0', '0', '0'],
    ['0', '1/8*sqrt(3)', '3/8*sqrt(5)', '-3/16*sqrt(7)', '1/16', '0', '0', '0', '0', '0'],
    ['-1/16*sqrt(11)', '-1/16*sqrt(33)', '-1/32*sqrt(55)', '3/32*sqrt(77)', '-3/32*sqrt(11)', '1/32', '0', '0', '0', '0'],
    ['0', '-1/64*sqrt(39)', '-3/64*sqrt(65)', '-1/16*sqrt(91)', '3/16*sqrt(13)', '-1/64*sqrt(143)', '1/64', '0', '0', '0'],
    ['5/128*sqrt(15)', '15/128*sqrt(5)', '19/128*sqrt(3)', '-1/128*sqrt(105)', '-25/128*sqrt(15)', '5/128*sqrt(165)', '-1/128*sqrt(195)', '1/128', '0', '0'],
    ['0', '1/128*sqrt(51)', '3/128*sqrt(85)', '5/128*sqrt(119)', '9/128*sqrt(17)', '-7/128*sqrt(187)', '3/128*sqrt(221)', '-1/256*sqrt(255)', '1/256', '0'],
    ['-7/256*sqrt(19)', '-7/256*sqrt(57)', '-3/128*sqrt(95)', '-1/128*sqrt(133)', '9/128*sqrt(19)', '5/128*sqrt(209)', '-21/512*sqrt(247)', '7/512*sqrt(285)', '-1/512*sqrt(323)', '1/512'],
]

HAT_D = {
    1: (
        ['1/2*sqrt(2)'],
        [
            ['1'],
        ],
    ),
    2: (
        ['1/2*sqrt(6)', '3/4*sqrt(2)'],
        [
            ['0', '1'],
            ['-1/3', '1'],
        ],
    ),
    3: (
        ['5/6*sqrt(2)', '5/8*sqrt(6)', '1/3*sqrt(10)'],
        [
            ['-1/5', '3/5', '1'],
            ['0', '-1/5', '1'],
            ['1/4', '-3/4', '1'],
        ],
    ),
    4: (
        ['7/170*sqrt(510)', '1/4*sqrt(42)', '4/85*sqrt(1190)', '1/16*sqrt(210)'],
        [
            ['0', '-2/7', '10/7', '1'],
            ['2/21', '-2/7', '5/21', '1'],
            ['0', '3/32', '-15/32', '1'],
            ['-5/21', '5/7', '-23/21', '1'],
        ],
    ),
    5: (
        ['3/62*sqrt(186)', '9/38*sqrt(38)', '45/17143*sqrt(514290)', '33/608*sqrt(798)', '12/553*sqrt(1106)'],
        [
            ['2', '-6', '5', '21', '9'],
            ['0', '3/2', '-15/2', '14', '18'],
            ['-5/2', '15/2', '-67/7', '-3', '270/7'],
            ['0', '-1', '5', '-25/2', '33/2'],
            ['7/4', '-21/4', '235/28', '-39/4', '48/7'],
        ],
    ),
    6: (
        ['11/210*sqrt(70)', '55/5396*sqrt(13490)', '506/48405*sqrt(32270)', '845/129504*sqrt(89034)', '4/1383*sqrt(212982)', '13/192*sqrt(66)'],
        [
            ['0', '3/11', '-15/11', '28/11', '36/11', '1'],
            ['-1/11', '3/11', '-19/55', '-7/55', '15/11', '1'],
            ['0', '-39/1012', '195/1012', '-3647/8096', '261/736', '1'],
            ['504/9295', '-1512/9295', '437/1859', '-7/55', '-3513/9295', '1'],
            ['0', '3/64', '-15/64', '79/128', '-135/128', '1'],
            ['-42/143', '126/143', '-205/143', '259/143', '-249/143', '1'],
        ],
    ),
    7: (
        ['13/10922*sqrt(54610)', '13/80*sqrt(30)', '21931/67306825*sqrt(26922730)', '299/26080*sqrt(34230)', '129584/1976547925*sqrt(790619170)', '221/20864*sqrt(10758)', '32/160369*sqrt(4169594)'],
        [
            ['-5/13', '15/13', '-19/13', '-7/13', '75/13', '55/13', '1'],
            ['0', '-1/13', '5/13', '-35/39', '9/13', '77/39', '1'],
            ['641/12532', '-1923/12532', '19235/87724', '-99/964', '-34539/87724', '5445/6748', '1'],
            ['0', '7/299', '-35/299', '265/897', '-123/299', '11/897', '1'],
            ['-15279/296192', '45837/296192', '-490215/2073344', '62403/296192', '40629/518336', '-26895/39872', '1'],
            ['0', '-9/221', '45/221', '-28/51', '228/221', '-899/663', '1'],
            ['363/1024', '-1089/1024', '3575/2048', '-4697/2048', '5091/2048', '-4213/2048', '1'],
        ],
    ),
    8: (
        ['1/514*sqrt(7710)', '21/2756*sqrt(6890)', '744/58623499*sqrt(12310934790)', '266441/10213835216*sqrt(6383647010)', '51536/5613485163*sqrt(56134851630)', '1729665/770944432864*sqrt(530024297594)', '320/270699*sqrt(541398)', '323/6656768*sqrt(37184290)'],
        [
            ['0', '-2/5', '2', '-14/3', '18/5', '154/15', '26/5', '1'],
            ['2/15', '-2/5', '4/7', '-4/15', '-36/35', '44/21', '13/5', '1'],
            ['0', '473/14880', '-473/2976', '223/558', '-169/310', '-2167/89280', '37817/29760', '1'],
            ['-6778/190315', '20334/190315', '-7582/47019', '75118/570945', '128307/1332205', '-394295/799323', '230477/570945', '1'],
            ['0', '-7007/412288', '35035/412288', '-367003/1649152', '612339/1649152', '-247467/824576', '-246753/824576', '1'],
            ['30778/576555', '-30778/192185', '174373/691866', '-133193/494190', '1212121/12684210', '1289921/3459330', '-972907/1001385', '1'],
            ['0', '1573/40960', '-1573/8192', '5369/10240', '-10569/10240', '63261/40960', '-67977/40960', '1'],
            ['-143/323', '429/323', '-2123/969', '2849/969', '-12021/3553', '3151/969', '-25273/10659', '1'],
        ],
    ),
    9: (
        ['17/9198*sqrt(3066)', '17/21837*sqrt(305718)', '254099/3218927481*sqrt(195086514)', '15181/294712152*sqrt(1350764030)', '27011980/24892799114183*sqrt(4525963475306)', '25517/1812040440*sqrt(21593481910)', '488648/1089355614543*sqrt(9441081992706)', '7429/68743680*sqrt(38399790)', '64/5176431*sqrt(293331090)'],
        [
            ['14/17', '-42/17', '60/17', '-28/17', '-108/17', '220/17', '273/17', '105/17', '1'],
            ['0', '7/68', '-35/68', '22/17', '-30/17', '-11/136', '559/136', '55/17', '1'],
            ['-16093/254099', '48279/254099', '-8565/29894', '118027/508198', '179253/1016396', '-893519/1016396', '174447/254099', '26040/14947', '1'],
            ['0', '-257/15181', '1285/15181', '-147357/667964', '240645/667964', '-7915/30362', '-117611/333982', '132641/166991', '1'],
            ['3125551/108047920', '-9376653/108047920', '23338523/172876672', '-116724881/864383360', '12646833/864383360', '228799241/864383360', '-53297647/108047920', '83601/1271152', '1'],
            ['0', '5687/408272', '-28435/408272', '209097/1122748', '-380505/1122748', '2103635/5307536', '-498977/4490992', '-2187635/3648931', '1'],
            ['-915629/15636736', '2746887/15636736', '-8797695/31273472', '10308641/31273472', '-7081371/31273472', '-4364723/31273472', '5933817/7818368', '-584115/459904', '1'],
            ['0', '-286/7429', '1430/7429', '-3934/7429', '7950/7429', '-165350/96577', '16006/7429', '-189745/96577', '1'],
            ['9295/16384', '-27885/16384', '46137/16384', '-62699/16384', '74655/16384', '-77605/16384', '67353/16384', '-43971/16384', '1'],
        ],
    ),
    10: (
        ['19/139810*sqrt(195734)', '57/20260*sqrt(10130)', '60154/32185730005*sqrt(193114380030)', '2685897/692981994920*sqrt(173245498730)', '32615476/19198066238065*sqrt(1772129191206)', '320784657/30204613135130576*sqrt(49082496344587186)', '41893024/2113917573911*sqrt(8789678062)', '8339225/799643641604608*sqrt(11572967547441690)', '64/214489*sqrt(2863718)', '115/14488576*sqrt(356469906)'],
        [
            ['0', '14/19', '-70/19', '176/19', '-240/19', '-11/19', '559/19', '440/19', '136/19', '1'],
            ['-14/57', '14/19', '-10/9', '154/171', '13/19', '-583/171', '455/171', '385/57', '221/57', '1'],
            ['0', '-3419/90231', '17095/90231', '-1425347/2887392', '774985/962464', '-11/19', '-23868/30077', '1267475/721848', '28101/12664', '1'],
            ['33352/895299', '-33352/298433', '1864805/10743588', '-1847363/10743588', '44417/3581196', '3764651/10743588', '-1676545/2685897', '6615/298433', '1060307/895299', '1'],
            ['0', '16997513/1565542848', '-84987565/1565542848', '452164559/3131085696', '-268652845/1043695232', '72951373/260923808', '-4507737/260923808', '-390871835/782771424', '5774883/13732832', '1'],
            ['-16858127/641569314', '16858127/213856438', '-480980555/3849415884', '23247763/167365908', '-387592627/5560267388', '-6519604355/50042406492', '383279392/962353971', '-1713869980/4170200541', '-1017012947/4170200541', '1'],
            ['0', '-8340319/670288384', '41701595/670288384', '-903622335/5362307072', '1727236023/5362307072', '-74014413/167572096', '28755857/83786048', '1728420455/10724614144', '-505997741/564453376', '1'],
            ['1274416/19013433', '-1274416/6337811', '51583246/158445275', '-191156966/475335825', '144242082/411957715', '-14844610/247174629', '-83114491/158445275', '2550408241/2059788575', '-9702647507/6179365725', '1'],
            ['0', '663/16384', '-3315/16384', '9163/16384', '-18819/16384', '407099/212992', '-42891/16384', '1218885/425984', '-74409/32768', '1'],
            ['-4862/6555', '4862/2185', '-1612/437', '33124/6555', '-13428/2185', '43868/6555', '-13951/2185', '2213/437', '-19637/6555', '1'],
        ],
    ),
}
